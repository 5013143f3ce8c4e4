"""The checking-stack witness: a^i b^j is accepted exactly when i divides j."""

from semitrio.cstack import divisibility_witness, simulate_rncsa

W = divisibility_witness()
print("   j: " + " ".join(f"{j:2}" for j in range(1, 13)))
for i in range(1, 7):
    marks = " ".join(" x" if simulate_rncsa(W, "a" * i + "b" * j) else " ." for j in range(1, 13))
    print(f"i={i:2}: {marks}")
