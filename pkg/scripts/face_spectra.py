"""Face-length spectra and genus of the embeddings for a range of odd n.

    python scripts/face_spectra.py --n 3 5 7 --seed 0
"""
import argparse

from heffter.constructions import construct, supported_t
from heffter.embedding import embed, predicted_spectrum_check
from heffter.modcore import UnsupportedParameters
from heffter.verifier import find_compatible_orderings


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, nargs="+", default=[1, 3, 5, 7])
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    for n in args.n:
        for t in supported_t(n):
            A = construct(n, t)
            rep = embed(A, find_compatible_orderings(A, seed=args.seed))
            try:
                check = predicted_spectrum_check(rep, n, t)
                verdict = f"{check.rule}: {'ok' if check else 'violates ' + str(check.violations)}"
            except UnsupportedParameters:
                verdict = "no prediction"
            spec = " ".join(f"{col}{L}x{c}" for L, c, col in rep.spectrum)
            print(f"n={n:<2} t={t:<4} v={A.v:<5} F={rep.F:<5} genus={rep.genus:<7} [{verdict}]  {spec}")


if __name__ == "__main__":
    main()
