"""Fundamental groups out of symbols, and what can be decided about them.

The presentation has one generator h for the common fiber; killing h
leaves the Fuchsian quotient, a 2-orbifold group whose size class is
decidable by pure arithmetic. Coset enumeration settles finite orders.
"""

from seifert import (abelianization, coset_enumerate, fuchsian_quotient,
                     fuchsian_size_class, parse_symbol, pi1_presentation,
                     presentation_text, signature_of_symbol, triangle_info,
                     triangle_presentation)

POINCARE = "(O,o,0 | 1, (2,1), (3,1), (5,1))"

print("== presentations ==")
s = parse_symbol(POINCARE)
print("symbol", POINCARE)
print("pi1:     ", presentation_text(pi1_presentation(s)))
print("quotient:", presentation_text(fuchsian_quotient(s)))

print()
print("== abelianization and order ==")
for text in [POINCARE, "(O,o,0 | -1, (2,1), (3,1), (5,1))",
             "(N,n,I,1 | (0,0))", "(O,o,2 | 3)"]:
    s = parse_symbol(text)
    h1 = abelianization(pi1_presentation(s))
    res = coset_enumerate(pi1_presentation(s), 50000)
    order = res.order if res.is_finite else f"not closed at {res.cosets_used}"
    print(f"{text:38} H1 = {h1.describe():10} |pi1| = {order}")

print()
print("== triangle groups ==")
for p, q, r in [(2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 3, 7)]:
    info = triangle_info(p, q, r)
    if info.finite:
        enum = coset_enumerate(triangle_presentation(p, q, r))
        print(f"({p},{q},{r}): {info.geometry}, order {info.order} "
              f"(enumeration agrees: {enum.order == info.order})")
    else:
        print(f"({p},{q},{r}): {info.geometry}, infinite")

print()
print("== size classes of Fuchsian quotients ==")
for text in [POINCARE, "(O,o,0 | -1, (2,1), (4,1), (4,1))",
             "(O,o,0 | -1, (2,1), (3,1), (7,1))", "(O,o,1 | 0)"]:
    sig = signature_of_symbol(parse_symbol(text))
    print(f"{text:38} {fuchsian_size_class(sig).value}")
