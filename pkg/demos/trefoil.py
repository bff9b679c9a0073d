"""Walk the smallest modular knot, the trefoil, through every stage."""

from modknot import (QuadraticForm, alexander, alexander_of_spec, burau, cf_expand,
                     lyndon_canonical, modular_braid, principal_root, spec_from_word,
                     word_from_period)

form = QuadraticForm(5, -6, -3)
root = principal_root(form)
cf = cf_expand(root)
word = lyndon_canonical(word_from_period(cf.period))
print("form      ", form, " disc", form.disc)
print("root      ", root)
print("cf        ", cf)
print("word      ", word)

b = modular_braid(word)
print("braid     ", b)
print("burau row ", [str(x) for x in burau(b).row(0)])

spec = spec_from_word(word)
print("spec      ", spec)
print("alexander ", alexander(b))
assert alexander(b) == alexander_of_spec(spec)
