"""Covers: the Euler sum, orientation double covers, fiberless covers.

The Euler sum is the single rational obstruction of a closed oriented
symbol. Non-orientable total spaces unwrap to an orientation double
cover, and class-O symbols with infinite quotient unwrap further to
covers with no exceptional fibers at all.
"""

from seifert import (IndexNotDivisible, OddEulerCharacteristic,
                     QuotientFinite, euler_sum, fiberless_cover,
                     orientable_double_cover, parse_symbol, render_symbol,
                     reverse_orientation, suggest_cover_sheets)


def sym(text):
    return parse_symbol(text)


print("== euler sum ==")
for text in [
    "(O,o,0 | -1, (2,1), (3,1), (7,1))",
    "(O,o,0 | 1, (2,1), (3,1), (5,1))",
    "(O,o,1 | 0)",
    "(O,o,0 | 2, (5,3))",
]:
    print(f"{text:38} e = {euler_sum(sym(text)).value}")

print()
print("== orientation double cover ==")
for text in [
    "(N,n,I,1 | (0,0), (3,1))",
    "(N,o,2 | (0,1))",
    "(N,n,III,3 | (1,0), (5,2))",
]:
    cover = orientable_double_cover(sym(text))
    print(f"{text:28} -> {render_symbol(cover)}")
cover = orientable_double_cover(sym("(N,n,I,1 | (0,0), (3,1))"))
back = render_symbol(reverse_orientation(cover))
print(f"cover euler sum {euler_sum(cover).value}, mirror {back}")
# each crossing pair lifts alongside its mirror, which forces the
# cover to be amphichiral with Euler sum zero

print()
print("== fiberless covers ==")
s = sym("(O,o,0 | -1, (2,1), (3,1), (7,1))")
n = suggest_cover_sheets(s)
res = fiberless_cover(s, n)
print(f"suggested sheets {n}: cover {render_symbol(res.symbol)}, "
      f"orbit chi {res.orbit_chi}")
res = fiberless_cover(sym("(O,o,2 | 5)"), 1)
print(f"one sheet keeps a fiberless symbol: {render_symbol(res.symbol)}")
res = fiberless_cover(sym("(O,n,2 | 1)"), 2)
print(f"non-orientable orbit: symbol known={res.orbit_known}, "
      f"obstruction {res.obstruction}, orbit chi {res.orbit_chi}")

print()
print("== when no such cover exists ==")
s = sym("(O,o,0 | -1, (2,1), (3,1), (7,1))")
for sheets in (41, 42):
    try:
        fiberless_cover(s, sheets)
    except IndexNotDivisible:
        print(f"{sheets} sheets: some fiber index does not divide")
    except OddEulerCharacteristic:
        print(f"{sheets} sheets: orbit Euler characteristic comes out odd")
try:
    suggest_cover_sheets(sym("(O,o,0 | 1, (2,1), (3,1), (5,1))"))
except QuotientFinite:
    print("finite quotient: only finitely many covers, none fiberless")
