#!/usr/bin/env python3
"""Writes the synthetic reference dataset under data/.

The raw indicator series behind the published summary table are not public,
so each indicator here is an illustrative 9-year shape (FY2016-FY2024) that is
affinely rescaled to hit the published mean and sample standard deviation
exactly. FY2024 movements follow the sector narrative: real and fiscal sectors
improve, the monetary and external sectors deteriorate.
"""

import math
import pathlib
import sys

YEARS = list(range(2016, 2025))

# id, sector, polarity, units, display name, mean, std, shape (FY2016..FY2024)
INDICATORS = [
    ("GDPG", "RS", "positive", "fraction", "GDP Growth Rate", 0.0652, 0.0131,
     [7.11, 7.28, 7.88, 8.15, 3.45, 6.94, 7.10, 5.78, 5.95]),
    ("AP", "RS", "positive", "fraction", "Agricultural Production", 0.0297, 0.0321,
     [2.8, 3.0, 4.2, 3.9, 4.6, 3.4, 3.1, 2.6, 6.9]),
    ("QIIP", "RS", "positive", "fraction", "Quantum Index of Industrial Production", 0.0857, 0.0567,
     [11.1, 10.2, 12.6, 14.2, 1.9, 8.6, 9.9, 6.1, 5.4]),
    ("INFL", "RS", "negative", "fraction", "Inflation", 0.0680, 0.0178,
     [5.9, 5.4, 5.8, 5.5, 5.6, 5.6, 6.2, 9.0, 9.7]),
    ("DCGDP", "RS", "positive", "fraction", "Domestic Credit to GDP", 0.4038, 0.0177,
     [41.0, 41.6, 42.9, 41.9, 39.4, 39.2, 40.2, 38.6, 38.7]),
    ("DCG", "MS", "positive", "fraction", "Domestic Credit Growth", 0.1307, 0.0231,
     [14.2, 15.9, 14.6, 12.1, 13.7, 11.1, 15.8, 12.0, 9.3]),
    ("PLR", "MS", "positive", "fraction", "Performing Loan Ratio", 0.8986, 0.0135,
     [90.9, 89.7, 89.7, 90.7, 92.3, 92.1, 91.0, 90.9, 83.2]),
    ("CRAR", "MS", "positive", "fraction", "Capital to Risk-weighted Asset Ratio", 0.1112, 0.0047,
     [10.8, 10.8, 10.5, 11.6, 11.6, 11.2, 11.8, 11.1, 10.6]),
    ("ROA", "MS", "positive", "fraction", "Return on Assets", 0.0038, 0.0008,
     [0.68, 0.74, 0.30, 0.43, 0.25, 0.35, 0.43, 0.46, 0.30]),
    ("CMR", "MS", "positive", "fraction", "Capital Market Return", 0.0385, 0.2356,
     [-2.0, 24.0, -13.8, -17.0, 18.9, 53.0, -4.3, -0.9, -22.5]),
    ("CR", "MS", "negative", "fraction", "Call Money Rate", 0.0476, 0.0195,
     [3.7, 3.9, 3.8, 4.9, 5.0, 2.0, 4.4, 6.1, 9.1]),
    ("FBGDP", "FS", "positive", "fraction", "Fiscal Balance to GDP", -0.0454, 0.0049,
     [-3.8, -3.4, -4.6, -5.5, -4.8, -3.7, -5.1, -4.6, -4.1]),
    ("GDGDP", "FS", "negative", "fraction", "Government Debt to GDP", 0.1893, 0.0405,
     [13.0, 14.9, 16.1, 16.7, 19.1, 21.2, 22.8, 24.0, 24.4]),
    ("TRGDP", "FS", "positive", "fraction", "Tax Revenue to GDP", 0.0745, 0.0027,
     [7.3, 7.7, 7.5, 7.6, 7.8, 7.6, 7.5, 7.1, 7.9]),
    ("EDGDP", "ES", "negative", "fraction", "External Debt to GDP", 0.1944, 0.0317,
     [15.2, 16.1, 17.4, 18.1, 19.3, 20.8, 21.9, 22.7, 23.5]),
    ("RED", "ES", "positive", "fraction", "Reserve to External Debt", 0.5212, 0.1647,
     [72.7, 61.4, 54.5, 52.3, 56.2, 63.4, 44.1, 30.4, 25.1]),
    ("CABGDP", "ES", "positive", "fraction", "Current Account Balance to GDP", -0.0124, 0.0149,
     [1.7, -0.5, -3.5, -1.5, -1.3, -1.1, -4.1, -0.7, -2.6]),
    ("REER", "ES", "negative", "index_level", "Real Effective Exchange Rate", 104.86, 5.4134,
     [96.0, 99.9, 103.4, 107.0, 110.8, 112.2, 109.1, 104.9, 103.0]),
    ("NIIP", "ES", "positive", "fraction", "Net International Investment Position to GDP",
     -1.3347, 0.4508,
     [-0.7, -0.8, -1.0, -1.2, -1.3, -1.3, -1.6, -1.9, -2.2]),
]


def rescale(shape, mean, std):
    n = len(shape)
    m = sum(shape) / n
    s = math.sqrt(sum((v - m) ** 2 for v in shape) / (n - 1))
    return [mean + std * (v - m) / s for v in shape]


def fmt(v):
    return "%.17g" % v


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    counts = {}
    for row in INDICATORS:
        counts[row[1]] = counts.get(row[1], 0) + 1

    rows = []
    for ind_id, *_rest, mean, std, shape in INDICATORS:
        for year, v in zip(YEARS, rescale(shape, mean, std)):
            rows.append((year, ind_id, v))
    rows.sort()
    with open(out / "panel.csv", "w", newline="\n") as f:
        f.write("fiscal_year,indicator_id,value\n")
        for year, ind_id, v in rows:
            f.write("%d,%s,%s\n" % (year, ind_id, fmt(v)))

    header = "indicator_id,sector,polarity,within_weight,units,display_name\n"
    with open(out / "indicators.csv", "w", newline="\n") as f:
        f.write(header)
        for ind_id, sector, pol, units, name, *_ in INDICATORS:
            f.write("%s,%s,%s,%s,%s,%s\n" % (ind_id, sector, pol, fmt(1.0 / counts[sector]), units, name))
    with open(out / "indicators_flat.csv", "w", newline="\n") as f:
        f.write(header)
        for ind_id, sector, pol, units, name, *_ in INDICATORS:
            f.write("%s,%s,%s,%s,%s,%s\n" % (ind_id, sector, pol, fmt(1.0 / len(INDICATORS)), units, name))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data")
