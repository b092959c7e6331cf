"""Plot CSV written by `qbath figure --fig2` or `qbath figure --fig1`.

    qbath figure --fig2 --out fig2.csv && python plot_figures.py fig2.csv
"""
import csv
import sys

import matplotlib.pyplot as plt


def load(path):
    with open(path) as fh:
        rows = [r for r in csv.DictReader(line for line in fh if not line.startswith("#"))]
    return [{k: (v if k == "method" else float(v) if k != "second_law_pass" else v == "true")
             for k, v in r.items()} for r in rows]


def main(path):
    rows = load(path)
    omegas = sorted({r["omega_over_w0"] for r in rows})
    fig, ax = plt.subplots()
    if len(omegas) == 1:
        g = [r["gamma_over_w0"] for r in rows]
        ax.plot(g, [r["F_over_E0"] for r in rows], label="F/E0")
        ax.plot(g, [r["H_over_E0"] for r in rows], label="<H>/E0")
        ax.set_xlabel("gamma/w0")
        ax.legend()
    else:
        for w in omegas[:: max(1, len(omegas) // 6)]:
            sel = [r for r in rows if r["omega_over_w0"] == w]
            ax.plot([r["gamma_over_w0"] for r in sel], [r["H_over_E0"] for r in sel], label=f"Omega/w0={w:.3g}")
        ax.set_xlabel("gamma/w0")
        ax.set_ylabel("<H>/E0")
        ax.legend()
    out = path.rsplit(".", 1)[0] + ".png"
    fig.savefig(out, dpi=150)
    print(out)


if __name__ == "__main__":
    main(sys.argv[1])
