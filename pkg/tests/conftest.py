import pytest

from effgravity import parse_edge_list

# Seven-node worked-example network: a hub (node 1) adjacent to everything,
# a secondary center (node 5), and a leaf (node 7). Degrees 6,2,2,3,4,2,1.
SEVEN_NODE_EDGE_LIST = "1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n2 5\n3 5\n4 5\n4 6\n"

SEVEN_NODE_DEGREES = (6, 2, 2, 3, 4, 2, 1)


@pytest.fixture
def seven_node_graph():
    graph, _ = parse_edge_list(SEVEN_NODE_EDGE_LIST)
    return graph
