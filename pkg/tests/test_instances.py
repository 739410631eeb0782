import json
from fractions import Fraction

import pytest

from centrality_improvement.graph import Graph, GraphError, InvalidSolutionError
from centrality_improvement.instances import (
    ImprovementInstance,
    Solution,
    format_instance,
    format_solution,
    instance_from_dict,
    instance_to_dict,
    parse_instance,
    parse_solution,
    solution_to_dict,
    verify,
)


class TestInstance:
    def test_validation(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(ValueError):
            ImprovementInstance.build(g, 0, -1, 0, "c")
        with pytest.raises(GraphError):
            ImprovementInstance.build(g, 7, 1, 0, "c")

    def test_budget_may_exceed_absent_pairs(self):
        inst = ImprovementInstance.build(Graph(2), 0, 5, 0, "c")
        assert inst.k == 5

    def test_kind_name(self):
        inst = ImprovementInstance.build(Graph(2, directed=True), 0, 1, 0, "b")
        assert inst.kind.name == "directed betweenness"

    def test_text_round_trip(self, example_instance):
        assert parse_instance(format_instance(example_instance)) == example_instance

    def test_dict_round_trip(self, example_instance):
        data = json.loads(json.dumps(instance_to_dict(example_instance)))
        assert data["r"] == "4/1"
        assert instance_from_dict(data) == example_instance

    @pytest.mark.parametrize(
        "text",
        [
            "undirected 3\nz 0\nk 1\nr 1\n",
            "undirected 3\nz 0\nk 1\nr 1\nkind c\nk 2\n",
            "undirected 3\nz 0\nk one\nr 1\nkind c\n",
            "undirected 3\nz 0\nk 1\nr 1\nkind degree\n",
            "undirected 3\nz 0\nk 1\nr 1/0\nkind c\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_instance(text)


class TestVerify:
    def test_example_solution(self, example_instance):
        assert verify(example_instance, [(6, 1), (6, 2)]) == (True, Fraction(4))

    def test_empty_below_threshold(self, example_instance):
        assert verify(example_instance, []) == (False, Fraction(0))

    def test_order_independent(self, example_instance):
        assert verify(example_instance, [(2, 6), (1, 6)]) == verify(example_instance, [(6, 1), (6, 2)])

    def test_existing_edge_named(self, example_instance):
        with pytest.raises(InvalidSolutionError) as info:
            verify(example_instance, [(0, 2)])
        assert info.value.pair == (0, 2)

    def test_budget_exceeded(self, example_instance):
        with pytest.raises(InvalidSolutionError):
            verify(example_instance, [(6, 0), (6, 1), (6, 2)])

    def test_self_loop(self, example_instance):
        with pytest.raises(InvalidSolutionError):
            verify(example_instance, [(6, 6)])


class TestSolutionFormat:
    SOLUTION = Solution(((1, 6), (2, 6)), Fraction(4))

    def test_text_round_trip(self):
        pairs, claimed = parse_solution(format_solution(self.SOLUTION))
        assert pairs == [(1, 6), (2, 6)] and claimed == 4

    def test_json_round_trip(self):
        text = json.dumps({"format": 1, "solution": solution_to_dict(self.SOLUTION)})
        assert parse_solution(text) == ([(1, 6), (2, 6)], Fraction(4))

    def test_extra_lines_ignored(self):
        text = "solver incident\nr 4/1\nachieved 4/1\nadd 1 6\ndecision yes\n"
        assert parse_solution(text) == ([(1, 6)], Fraction(4))

    def test_bad_addition_line(self):
        with pytest.raises(GraphError):
            parse_solution("add 1\n")
