"""
Reading and writing graphs
==========================

graph6 strings and plain edge lists both load into the same Graph type.
"""

from dpcolor import from_edge_list, join, make_complete, make_cycle, parse_graph, to_edge_list, to_graph6

wheel = join(make_cycle(4), make_complete(1))
s = to_graph6(wheel)
print("graph6:", s)
print(to_edge_list(wheel))
assert parse_graph(s) == from_edge_list(to_edge_list(wheel)) == wheel
