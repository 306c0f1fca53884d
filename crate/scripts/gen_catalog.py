#!/usr/bin/env python3
"""Generate crates/core/data/catalog.txt.

Dimensions come from the classical matrix descriptions, restricted root data
from the standard Satake tables.
"""

import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "data" / "catalog.txt"


def so_dim(n):
    return n * (n - 1) // 2


def sp_dim(n):
    return n * (2 * n + 1)


def record(name, family, params, dim_g, dim_k, rank, sigma, mult, split=False):
    return {
        "name": name,
        "family": family,
        "params": ",".join(str(p) for p in params) or "-",
        "dim_g": dim_g,
        "dim_k": dim_k,
        "real_rank": rank,
        "sigma": sigma or "-",
        "mult": ",".join(f"{k}:{v}" for k, v in sorted(mult.items())) or "-",
        "split": str(split).lower(),
        "compact": str(sigma is None).lower(),
    }


def records():
    out = []
    for n in range(2, 25):
        out.append(record(f"sl({n},R)", "sl_R", [n], n * n - 1, so_dim(n), n - 1, f"A{n-1}", {1: 1}, True))
    for p in range(1, 13):
        for q in range(p, 25 - p):
            if (p, q) == (1, 1):
                continue
            dim_g, dim_k = (p + q) ** 2 - 1, p * p + q * q - 1
            if p == q:
                sigma, mult = f"C{p}", {1: 2, 2: 1}
            elif p == 1:
                sigma, mult = "BC1", {1: 2 * (q - 1), 4: 1}
            else:
                sigma, mult = f"BC{p}", {1: 2 * (q - p), 2: 2, 4: 1}
            out.append(record(f"su({p},{q})", "su_pq", [p, q], dim_g, dim_k, p, sigma, mult))
    for p in range(1, 13):
        for q in range(p, 25 - p):
            if p + q <= 3 or (p, q) == (2, 2):
                continue
            dim_g, dim_k = so_dim(p + q), so_dim(p) + so_dim(q)
            split = q - p <= 1
            if p == 1:
                sigma, mult = "A1", {1: q - 1}
            elif p == q:
                sigma, mult = f"D{p}", {1: 1}
            else:
                sigma, mult = f"B{p}", {1: q - p, 2: 1}
            out.append(record(f"so({p},{q})", "so_pq", [p, q], dim_g, dim_k, p, sigma, mult, split))
    for n in range(2, 17):
        out.append(record(f"sp({n},R)", "sp_R", [n], sp_dim(n), n * n, n, f"C{n}", {1: 1, 2: 1}, True))
    for p in range(1, 9):
        for q in range(p, 17 - p):
            dim_g, dim_k = sp_dim(p + q), sp_dim(p) + sp_dim(q)
            if (p, q) == (1, 1):
                sigma, mult = "A1", {1: 3}
            elif p == q:
                sigma, mult = f"C{p}", {1: 4, 2: 3}
            elif p == 1:
                sigma, mult = "BC1", {1: 4 * (q - 1), 4: 3}
            else:
                sigma, mult = f"BC{p}", {1: 4 * (q - p), 2: 4, 4: 3}
            out.append(record(f"sp({p},{q})", "sp_pq", [p, q], dim_g, dim_k, p, sigma, mult))
    for n in range(2, 13):
        out.append(record(f"sl({n},H)", "sl_H", [n], 4 * n * n - 1, sp_dim(n), n - 1, f"A{n-1}", {1: 4}))
    for n in range(3, 17):
        r = n // 2
        if n % 2 == 0:
            sigma, mult = f"C{r}", {1: 4, 2: 1}
        elif r == 1:
            sigma, mult = "BC1", {1: 4, 4: 1}
        else:
            sigma, mult = f"BC{r}", {1: 4, 2: 4, 4: 1}
        out.append(record(f"so*({2*n})", "so_star", [n], so_dim(2 * n), n * n, r, sigma, mult))
    exceptional = [
        ("g2(2)", "g2_2", 14, 6, 2, "G2", {1: 1, 3: 1}, True),
        ("f4(4)", "f4_4", 52, 24, 4, "F4", {1: 1, 2: 1}, True),
        ("f4(-20)", "f4_m20", 52, 36, 1, "BC1", {1: 8, 4: 7}, False),
        ("e6(6)", "e6_6", 78, 36, 6, "E6", {1: 1}, True),
        ("e6(2)", "e6_2", 78, 38, 4, "F4", {1: 2, 2: 1}, False),
        ("e6(-14)", "e6_m14", 78, 46, 2, "BC2", {1: 8, 2: 6, 4: 1}, False),
        ("e6(-26)", "e6_m26", 78, 52, 2, "A2", {1: 8}, False),
        ("e7(7)", "e7_7", 133, 63, 7, "E7", {1: 1}, True),
        ("e8(8)", "e8_8", 248, 120, 8, "E8", {1: 1}, True),
    ]
    for name, fam, g, k, r, sigma, mult, split in exceptional:
        out.append(record(name, fam, [], g, k, r, sigma, mult, split))
    for n in range(2, 25):
        out.append(record(f"su({n})", "su", [n], n * n - 1, n * n - 1, 0, None, {}))
    for n in range(3, 25):
        if n != 4:
            out.append(record(f"so({n})", "so", [n], so_dim(n), so_dim(n), 0, None, {}))
    for n in range(1, 17):
        out.append(record(f"sp({n})", "sp", [n], sp_dim(n), sp_dim(n), 0, None, {}))
    for name, g in [("g2", 14), ("f4", 52), ("e6", 78), ("e7", 133), ("e8", 248)]:
        out.append(record(name, name, [], g, g, 0, None, {}))
    return out


def main():
    lines = ["schema=ckform-catalog/1"]
    for r in records():
        lines.append(" ".join(f"{k}={v}" for k, v in r.items()))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} records to {OUT}")


if __name__ == "__main__":
    main()
