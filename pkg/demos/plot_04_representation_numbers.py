"""
Representation numbers of binary and quaternary forms
=====================================================

Exact counts by enumeration against divisor-sum formulas, and a check of
when two forms of the same discriminant share representation numbers.
"""

from altbases import counting as cnt

for row in cnt.count_table((1, 1, 1), 12):
    print(f"n={row.n:3d}  r(n)={row.brute:3d}  formula={row.formula}")

# quaternary counts come from convolving the binary table
s = cnt.quaternary_count_table((1, 1, 1), 12)
print("s(n), n <= 12:", s)
print("divisor sum  :", [cnt.divisor_formula_s(n, -3) for n in range(13)])

# the seven odd class-number-one discriminants
for D in (-3, -7, -11, -19, -43, -67, -163):
    Q = cnt.PRINCIPAL_FORMS[D]
    table = cnt.binary_count_table(Q, 500)
    ok = all(table[n] == cnt.divisor_formula_class1(n, D) for n in range(1, 501))
    print(f"D={D:5d} form={Q}: formula matches up to 500: {ok}")

# class number two: equal discriminant does not mean equal counts
print(cnt.lemma_equivalence_probe((1, 0, 5), (2, 2, 3), 50).describe())
print(cnt.lemma_equivalence_probe((1, 1, 2), (2, 1, 1), 200).describe())
