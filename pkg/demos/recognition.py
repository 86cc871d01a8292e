"""Recognize Sym(9) and W(F4) from commuting graphs of involutions.

Run: python3 demos/recognition.py
"""

from __future__ import annotations

from weylgraph.recognize import (recognize_f4, recognize_sym, symmetric_input, weyl_b4_input,
                                 weyl_f4_input)


def show(title: str, rep) -> None:
    print(f"{title}: {rep.verdict}")
    for h in rep.hypotheses:
        mark = "ok  " if h.passed else "FAIL"
        print(f"  {mark} {h.name}" + (f"  ({h.witness})" if h.witness else ""))


def main() -> None:
    show("Sym9 with n = 7", recognize_sym(symmetric_input(9), 7))
    show("Sym8 with n = 7", recognize_sym(symmetric_input(8), 7))
    show("W(F4)", recognize_f4(weyl_f4_input()))
    show("W(B4)", recognize_f4(weyl_b4_input()))


if __name__ == "__main__":
    main()
