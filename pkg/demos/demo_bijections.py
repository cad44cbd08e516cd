"""Bijection walk-through: decompose, recompose and transport intervals.

Every nontrivial linear interval of an alt-Tamari poset splits into a
marked Dyck path plus a tuple of smaller Dyck paths; composing the same
data under a different increment function transports the interval to
another poset of the family while preserving its height and kind.
"""

from alttamari import IncrementFunction, decompose, compose, transport
from alttamari.dyck import parse_dyck


def show(delta, low, high):
    dec = decompose(delta, low, high)
    parts = ", ".join(p.word or "(empty)" for p in dec.parts)
    print(f"  [{low}, {high}]  under delta={delta}")
    print(f"    kind   : {dec.kind}")
    print(f"    marked : {dec.marked}")
    print(f"    parts  : {parts}")
    back = compose(delta, dec)
    print(f"    compose round-trip: {back[0]}, {back[1]}  "
          f"({'ok' if back == (low, high) else 'MISMATCH'})")
    print()


def main():
    tamari = IncrementFunction.ones(4)
    dyck = IncrementFunction.zeros(4)

    print("Decomposing linear intervals of Tam^(1111)_4:\n")
    show(tamari, parse_dyck("ududud" + "ud"), parse_dyck("uuddud" + "ud"))
    show(tamari, parse_dyck("uuudddud"), parse_dyck("uuuudddd"))   # left(3)
    show(tamari, parse_dyck("udududud"), parse_dyck("uudududd"))   # right(3)

    print("Transporting the right interval to the Dyck lattice:\n")
    low, high = parse_dyck("udududud"), parse_dyck("uudududd")
    out_low, out_high = transport(tamari, dyck, low, high)
    print(f"  [{low}, {high}]  in Tam^(1111)_4")
    print(f"  [{out_low}, {out_high}]  in Tam^(0000)_4")
    back = transport(dyck, tamari, out_low, out_high)
    print(f"  transported back: [{back[0]}, {back[1]}]")


if __name__ == "__main__":
    main()
