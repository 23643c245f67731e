# Building strong products and looking at their fibers.
# Run with: python3 notebooks/01_strong_products.py

from strongcut import cartesian_product, direct_product, strong_product
from strongcut.products import k2_odot, make_complete, make_cycle, make_path

g = make_path(3)   # 0 - 1 - 2
h = make_cycle(4)

p = strong_product(g, h)
print("P3 x C4:", p.order, "vertices,", p.size, "edges")

# strong = cartesian + direct, and the two edge sets never overlap
c, d = cartesian_product(g, h), direct_product(g, h)
print("cartesian", c.size, "+ direct", d.size, "=", c.size + d.size)

# row-major labels: (x, y) -> x * |V(H)| + y
print("vertex of (2, 1):", p.vertex(2, 1), " pair of 9:", p.pair(9))

# every H-fiber is a copy of C4, every G-fiber a copy of P3
for x in range(g.order):
    print("H-fiber at x =", x, sorted(p.fiber_h(x)))
for y in range(h.order):
    print("G-fiber at y =", y, sorted(p.fiber_g(y)))

# degree in the product is d(x) + d(y) + d(x)d(y)
print("degrees:", p.degrees())

# K2 odot H drops the edges inside both copies of H
q = k2_odot(make_path(3))
print("K2 odot P3:", q.order, "vertices,", q.size, "edges")

# K3 x K4 is just K12
print(strong_product(make_complete(3), make_complete(4)) == make_complete(12))
