"""Orbits of the cyclic bar construction of C2 are binary necklaces."""
from crossnerve import bar_construction, burnside_count, orbit_set
from crossnerve.finite import cyclic_group

C2 = cyclic_group(2)
X = bar_construction(C2, "cyclic", 4)

# degree n holds (n+1)-tuples; tau rotates them one step
for n in range(X.N + 1):
    orbits = orbit_set(X, n)
    print(f"n={n}: {X.size(n)} tuples, {len(orbits)} orbits, burnside {burnside_count(X, n)}")

# the orbits at n=2, one line per necklace
for orbit in orbit_set(X, 2):
    print("  ", " ".join("".join(X.levels[2][k]) for k in orbit))

# adding omega (dihedral) glues mirror images together
D = bar_construction(C2, "dihedral", 4)
print("dihedral orbit counts:", [len(orbit_set(D, n)) for n in range(D.N + 1)])
