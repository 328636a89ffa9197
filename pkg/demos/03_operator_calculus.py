"""Signed permutations, the seven families, and moving group elements past faces."""
from crossnerve import derive_operator_exchange
from crossnerve.crossed import act_on_monotone, enumerate_hom
from crossnerve.simplex import face
from crossnerve.weyl import Family, closure_order, evaluate, generator_word, tau, omega

print(f"{'family':18}" + "".join(f"n={n:<6}" for n in range(5)))
for family in Family:
    print(f"{family.value:18}" + "".join(f"{closure_order(family, n):<8}" for n in range(5)))

# tau o delta_0 = delta_n: the rotation moves the missing vertex to the end
psi, h = act_on_monotone(tau(3), face(0, 3))
print("tau3 . delta0 =", psi.values, "with group part", h)

# d_i tau = tau d_{i-1}, and the dihedral mirror d_i omega = omega d_{n-i}
for i in range(4):
    j, h = derive_operator_exchange(tau(3), "face", i)
    j2, h2 = derive_operator_exchange(omega(3), "face", i)
    print(f"d{i} tau -> {' '.join(generator_word('cyclic', h)) or 'id'} d{j};"
          f"  d{i} omega -> {' '.join(generator_word('dihedral', h2))} d{j2}")

# a Weyl word and its exchange past s_1
g = evaluate(["sigma1", "kappa", "sigma2"], 2)
j, h = derive_operator_exchange(g, "degeneracy", 1)
print("s1 . [sigma1 kappa sigma2] =", " ".join(generator_word("weyl", h)), f". s{j}")

print("|Hom([1],[2])| per family:", {f.value: len(enumerate_hom(f, 1, 2)) for f in Family})
