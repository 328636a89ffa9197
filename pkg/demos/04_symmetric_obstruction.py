"""Why the symmetric bar construction with multiplying faces is not a ΔS-set.

Any ΔS-set satisfies d_i s = d_{i-1} when s swaps positions i-1 and i,
because the swap followed by the face that skips i is the face that skips
i-1. With faces that multiply neighbours this asks for (b, ac) = (ab, c).
"""
from crossnerve import bar_construction, derive_operator_exchange, validate_truncation
from crossnerve.finite import cyclic_group, symmetric_group
from crossnerve.weyl import sigma

print("exchange for sigma1 past d1:", derive_operator_exchange(sigma(1, 2), "face", 1))

for G in (cyclic_group(1), cyclic_group(2), symmetric_group(3)):
    X = bar_construction(G, "symmetric", 3)
    rep = validate_truncation(X)
    print(f"{G.name}: valid={rep.ok}, {len(rep.failures)} failing relations")
    for f in rep.failures[:3]:
        print("   ", f)

# the cyclic structure on the same levels is fine
print("cyclic bar of S3 valid:", validate_truncation(bar_construction(symmetric_group(3), "cyclic", 3)).ok)
