#! /usr/bin/env python
"""Directed graph of allowed technology migrations"""

import networkx as nx


class MigrationGraph():
    """
    Technologies and the migrations allowed between them.

    Nodes carry their :class:`Technology` under the ``tech`` attribute. Edges
    naming an undeclared id are kept (the node has no ``tech``) so validation
    can report them.
    """

    def __init__(self, technologies=(), edges=()):
        graph = nx.DiGraph()
        for tech in technologies:
            graph.add_node(tech.id, tech=tech)
        for source, target in edges:
            graph.add_edge(source, target)
        self._graph = nx.freeze(graph)

    @property
    def digraph(self):
        """The frozen networkx graph"""
        return self._graph

    @property
    def nodes(self):
        """Sorted ids of every node, declared or not"""
        return sorted(self._graph.nodes)

    @property
    def edges(self):
        """Sorted (from_id, to_id) pairs"""
        return sorted(self._graph.edges)

    def technologies(self):
        """Declared technologies ordered by id"""
        return [data['tech'] for _, data in sorted(self._graph.nodes(data=True))
                if 'tech' in data]

    def unknown_nodes(self):
        return sorted(node for node, data in self._graph.nodes(data=True)
                      if 'tech' not in data)

    def technology(self, tech_id):
        """
        :raises KeyError: when ``tech_id`` is not a declared technology
        """
        try:
            return self._graph.nodes[tech_id]['tech']
        except KeyError:
            raise KeyError(tech_id) from None

    def successors(self, tech_id):
        """Declared out-neighbours of ``tech_id`` ordered by id"""
        return [self.technology(node)
                for node in sorted(self._graph.successors(tech_id))
                if 'tech' in self._graph.nodes[node]]

    def has_edge(self, source, target):
        return self._graph.has_edge(source, target)

    def with_edge(self, source, target):
        """A copy of this graph with one more edge"""
        return MigrationGraph(self.technologies(),
                              self.edges + [(source, target)])

    def __contains__(self, tech_id):
        return tech_id in self._graph and 'tech' in self._graph.nodes[tech_id]

    def __len__(self):
        return len(self.technologies())

    def __eq__(self, other):
        if not isinstance(other, MigrationGraph):
            return NotImplemented
        return (self.technologies() == other.technologies()
                and self.edges == other.edges)

    def __hash__(self):
        return hash((tuple(self.technologies()), tuple(self.edges)))
