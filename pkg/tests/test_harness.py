import json

import pytest

from mdd import (ExperimentConfig, Graph, InputError, PreconditionError,
                 generate_gnp, generate_random_regular,
                 generate_random_setsystem, parse_graph, parse_instance,
                 parse_setsystem, parse_solution, run_experiment,
                 serialize_graph, serialize_instance, serialize_setsystem,
                 serialize_solution, Instance, Objective, UNDELETABLE)


class TestGenerators:
    def test_regular_determinism(self):
        a = generate_random_regular(10, 3, 7)
        b = generate_random_regular(10, 3, 7)
        assert a == b
        assert a.regular_degree() == 3

    def test_n4_k3_is_k4(self):
        assert generate_random_regular(4, 3, 0) == Graph.complete(4)

    def test_odd_product_rejected(self):
        with pytest.raises(PreconditionError):
            generate_random_regular(5, 3, 0)

    def test_gnp_determinism_and_extremes(self):
        assert generate_gnp(8, 0.4, 3) == generate_gnp(8, 0.4, 3)
        assert generate_gnp(6, 0.0, 0).num_edges == 0
        assert generate_gnp(6, 1.0, 0).num_edges == 15

    def test_setsystem_meets_preconditions(self):
        for seed in range(10):
            sys = generate_random_setsystem(3, 5, seed)
            assert sys.universe_size == 3 and sys.num_sets == 5
            assert all(sys.occurrences(x) <= 4 for x in range(3))
            assert all(1 <= len(f) <= 4 for f in sys.family)
        assert (generate_random_setsystem(3, 5, 1)
                == generate_random_setsystem(3, 5, 1))

    def test_setsystem_rejects_r1(self):
        with pytest.raises(PreconditionError):
            generate_random_setsystem(1, 3, 0)


class TestFileIO:
    def test_graph_round_trip(self):
        g = Graph.petersen()
        text = serialize_graph(g)
        assert parse_graph(text) == g
        assert serialize_graph(parse_graph(text)) == text

    def test_graph_comments_and_blanks(self):
        text = "# a graph\n3 1\n\n0 1\n"
        assert parse_graph(text) == Graph(3, [(0, 1)])

    def test_graph_rejects_unordered_edge(self):
        with pytest.raises(InputError):
            parse_graph("3 1\n1 0\n")

    def test_graph_rejects_trailing(self):
        with pytest.raises(InputError):
            parse_graph("3 1\n0 1\n0 2\n")

    def test_instance_round_trip(self):
        inst = Instance(Graph.cycle(5), 2, (1, 4, 1, UNDELETABLE, 1),
                        Objective.MAX)
        text = serialize_instance(inst)
        assert parse_instance(text) == inst
        assert serialize_instance(parse_instance(text)) == text

    def test_instance_default_weights(self):
        inst = parse_instance("3 1\n0 1\np 0 objective min\n")
        assert inst.unit_weights
        assert inst.objective is Objective.MIN

    def test_instance_missing_header(self):
        with pytest.raises(InputError):
            parse_instance("3 1\n0 1\n")

    def test_setsystem_round_trip(self):
        sys = generate_random_setsystem(3, 4, 2)
        text = serialize_setsystem(sys)
        assert parse_setsystem(text) == sys
        assert serialize_setsystem(parse_setsystem(text)) == text

    def test_solution_round_trip(self):
        assert parse_solution(serialize_solution({5, 1, 3})) == frozenset({1, 3, 5})
        assert serialize_solution({5, 1, 3}) == "1 3 5\n"


class TestBench:
    def test_config_validation(self):
        with pytest.raises(InputError):
            ExperimentConfig(family="nope", sizes=[5])
        with pytest.raises(InputError):
            ExperimentConfig(family="gnp", sizes=[5], algorithms=["nope"])
        with pytest.raises(InputError):
            ExperimentConfig.from_json("not json")
        with pytest.raises(InputError):
            ExperimentConfig.from_json(json.dumps({"bogus": 1}))

    def test_gnp_experiment(self):
        cfg = ExperimentConfig(family="gnp", sizes=[6, 7],
                               algorithms=["oracle", "logn"],
                               instances_per_size=2, seed=1, max_L=8)
        report = run_experiment(cfg)
        assert len(report.rows) == 2 * 2 * 2
        for row in report.rows:
            assert row.feasible
            if row.ratio is not None:
                assert row.ratio >= 1.0 - 1e-9
        assert report.aggregates["oracle"]["max_ratio"] == 1.0
        # determinism apart from timing
        again = run_experiment(cfg)
        assert [(r.instance_id, r.algorithm, r.size, r.weight)
                for r in report.rows] == \
               [(r.instance_id, r.algorithm, r.size, r.weight)
                for r in again.rows]

    def test_regular_min_experiment(self):
        cfg = ExperimentConfig(family="regular", sizes=[8],
                               algorithms=["oracle", "kreg-exact", "dual-logn"],
                               k=3, instances_per_size=2, seed=2,
                               objective="min", max_L=10)
        report = run_experiment(cfg)
        for row in report.rows:
            if row.algorithm == "kreg-exact":
                assert row.ratio == 1.0

    def test_setcover_experiment(self):
        cfg = ExperimentConfig(family="setcover", sizes=[4, 5],
                               instances_per_size=2, seed=3)
        report = run_experiment(cfg)
        assert len(report.rows) == 2 * 2 * 2
        for row in report.rows:
            assert row.extra["gap"] == 0  # constructions preserve the optimum

    def test_report_serialization(self):
        cfg = ExperimentConfig(family="gnp", sizes=[5], instances_per_size=1)
        report = run_experiment(cfg)
        csv_text = report.to_csv()
        assert csv_text.splitlines()[0].startswith("instance_id,family,n,")
        assert len(csv_text.splitlines()) == 1 + len(report.rows)
        payload = json.loads(report.to_json())
        assert payload["config"]["family"] == "gnp"
        assert len(payload["rows"]) == len(report.rows)
