#!/usr/bin/env python3
"""Regenerate the bundled digit corpora (pi, e, sqrt(71)) in data/."""
import argparse
import pathlib

import mpmath


def digits_of(value, count):
    # mpmath.nstr rounds the last digit; compute a few extra and truncate.
    text = mpmath.nstr(value, count + 10, strip_zeros=False)
    integer, fraction = text.split(".")
    return integer + "." + fraction[: count - len(integer)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--digits", type=int, default=20100)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "data")
    args = parser.parse_args()
    mpmath.mp.dps = args.digits + 30
    constants = {"pi": mpmath.pi, "e": mpmath.e, "sqrt71": mpmath.sqrt(71)}
    args.out.mkdir(parents=True, exist_ok=True)
    for name, value in constants.items():
        text = digits_of(+value, args.digits)
        lines = [text[i:i + 100] for i in range(0, len(text), 100)]
        (args.out / f"{name}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
