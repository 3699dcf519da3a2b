from thetagraph import isomorphic_small, ring_product, ring_zmod, tensor_product, theta_graph
from thetagraph.finring import product_class_map

Z2, Z3 = theta_graph(ring_zmod(2)), theta_graph(ring_zmod(3))
Z6 = theta_graph(ring_zmod(6))
print(isomorphic_small(tensor_product(Z2, Z3), Z6))

GP, GT, mapping = product_class_map(ring_product([ring_zmod(4), ring_zmod(3)]))
print(GP.n, GT.n, mapping)
