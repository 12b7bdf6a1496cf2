import math
from collections import Counter
from fractions import Fraction

import pytest
from scipy import stats as sps

from proplist import BackendKind, OpKind, make_backend
from proplist.bench import (
    MNEMONICS,
    SCRIPTS,
    BenchReport,
    CellStats,
    anova_f,
    check_workload,
    emit_report,
    generate_workload,
    load_table4,
    parse_csv,
    parse_scripts,
    run_bench,
    run_script,
)
from proplist.bench.report import ReportFormatError
from proplist.bench.runner import observation_one

TABLE4_AVERAGES = {
    BackendKind.HASH: 0.096,
    BackendKind.SPLAY_TREE: 0.149,
    BackendKind.LINKED_LIST: 0.160,
    BackendKind.STATIC_ARRAY: 0.170,
    BackendKind.BITMASK_SET: 0.091,
}


def direct_anova(groups):
    """Exact rational one-way ANOVA, written out term by term."""
    groups = [[Fraction(x) for x in g] for g in groups]
    n = sum(len(g) for g in groups)
    grand = sum(sum(g) for g in groups) / n
    ssb = sum(len(g) * (sum(g) / len(g) - grand) ** 2 for g in groups)
    ssw = sum((x - sum(g) / len(g)) ** 2 for g in groups for x in g)
    k = len(groups)
    return ssb, ssw, (ssb / (k - 1)) / (ssw / (n - k)), k - 1, n - k


class TestScripts:
    def test_fifteen_rows(self):
        assert len(MNEMONICS) == len(SCRIPTS) == 15
        assert SCRIPTS["ILD"].label == "Insert-LookUp-Delete (ILD)"
        assert SCRIPTS["DDL"].ops == (OpKind.REMOVE, OpKind.REMOVE, OpKind.LOOKUP)

    def test_parse(self):
        assert len(parse_scripts("all")) == 15
        assert [s.mnemonic for s in parse_scripts("ild, lli")] == ["ILD", "LLI"]
        with pytest.raises(ValueError):
            parse_scripts("IXD")


class TestWorkload:
    def test_iii_shape(self):
        wl = generate_workload(1, "III")
        assert 25 <= wl.preload_count <= 29
        assert [op.kind for op in wl.ops] == [OpKind.INSERT] * 3
        preloaded = {op.name for op in wl.preload}
        assert not preloaded & {op.name for op in wl.ops}

    def test_deterministic(self):
        assert generate_workload(9, "DLI") == generate_workload(9, "DLI")
        assert generate_workload(9, "DLI") != generate_workload(10, "DLI")

    def test_preload_covers_range(self):
        counts = Counter(generate_workload(s, "LLL").preload_count for s in range(10_000))
        assert set(counts) == {25, 26, 27, 28, 29}

    @pytest.mark.parametrize("mnemonic", MNEMONICS)
    def test_scripted_ops_succeed(self, mnemonic):
        for seed in range(20):
            wl = generate_workload(seed, mnemonic)
            live = {op.name for op in wl.preload}
            for op in wl.ops:
                if op.kind is OpKind.INSERT:
                    assert op.name not in live
                    live.add(op.name)
                elif op.kind is OpKind.REMOVE:
                    assert op.name in live
                    live.remove(op.name)
                else:
                    assert op.name in live
                assert 1 <= len(op.name) <= 32
            for kind in BackendKind:
                assert check_workload(kind, wl)

    def test_preload_bounds_validated(self):
        with pytest.raises(ValueError):
            generate_workload(1, "ILD", preload_min=30, preload_max=29)


class TestRunScript:
    def test_single_sample(self):
        wl = generate_workload(1, "ILD")
        samples = run_script(BackendKind.BITMASK_SET, wl, repetitions=1, warmup=0)
        assert len(samples) == 1 and samples[0] > 0

    @pytest.mark.parametrize("reps,warmup", [(5, 0), (17, 3)])
    def test_sample_count(self, reps, warmup):
        wl = generate_workload(2, "DDD")
        assert len(run_script(BackendKind.HASH, wl, reps, warmup)) == reps

    def test_rejects_zero_reps(self):
        with pytest.raises(ValueError):
            run_script(BackendKind.HASH, generate_workload(1, "III"), 0, 0)

    def test_capacity_error_propagates(self):
        wl = generate_workload(1, "III", preload_min=32, preload_max=32)
        with pytest.raises(Exception) as info:
            run_script(BackendKind.STATIC_ARRAY, wl, 1, 0)
        assert info.value.kind.value == "CapacityExceeded"

    def test_timed_region_excludes_preload(self):
        """III after a 29-entry preload: only the scripted scans are counted."""
        wl = generate_workload(4, "III", preload_min=29, preload_max=29)
        ll = make_backend(BackendKind.LINKED_LIST)
        bm = make_backend(BackendKind.BITMASK_SET)
        for plist in (ll, bm):
            for op in wl.preload:
                plist.insert(op.name, op.value)
            plist.reset_counters()
            for op in wl.ops:
                plist.insert(op.name, op.value)
        assert ll.comparisons == 29 + 30 + 31
        assert bm.slot_visits <= 3 * 32


class TestAnova:
    def test_worked_example(self):
        ssb, ssw, f, dfb, dfw = direct_anova([[1, 2, 3], [4, 5, 6]])
        assert (ssb, ssw, f, dfb, dfw) == (Fraction(27, 2), 4, Fraction(27, 2), 1, 4)
        r = anova_f([[1, 2, 3], [4, 5, 6]])
        assert r.F == pytest.approx(13.5, abs=1e-9)
        assert (r.df_between, r.df_within) == (1, 4)

    def test_identical_groups(self):
        r = anova_f([[1, 2, 3], [1, 2, 3]])
        assert r.F == 0
        assert not r.significant_at_5pct

    def test_degenerate_constant(self):
        assert anova_f([[2, 2], [2, 2]]).F == 0
        assert math.isinf(anova_f([[1, 1], [2, 2]]).F)

    @pytest.mark.parametrize("seed", range(5))
    def test_against_direct_and_scipy(self, seed):
        import random
        rng = random.Random(seed)
        groups = [[rng.randint(0, 50) for _ in range(rng.randint(2, 9))] for _ in range(rng.randint(2, 5))]
        _, _, f, dfb, dfw = direct_anova(groups)
        r = anova_f(groups)
        assert r.F == pytest.approx(float(f), rel=1e-12)
        assert (r.df_between, r.df_within) == (dfb, dfw)
        assert r.p_value == pytest.approx(sps.f_oneway(*groups).pvalue, rel=1e-9)

    def test_input_errors(self):
        with pytest.raises(ValueError):
            anova_f([[1, 2, 3]])
        with pytest.raises(ValueError):
            anova_f([[1, 2], [3]])

    def test_table4_hash_vs_set_not_significant(self):
        t4 = load_table4()
        r = t4.f_test([BackendKind.HASH, BackendKind.BITMASK_SET])
        assert not r.significant_at_5pct
        assert r.p_bracket == "p >= 0.05"


def _tiny_report():
    scripts = parse_scripts("ILD,III")
    rep = BenchReport(scripts, [BackendKind.HASH, BackendKind.BITMASK_SET])
    for i, s in enumerate(scripts):
        for j, b in enumerate(rep.backends):
            rep.cells[s.mnemonic, b] = CellStats(10, 100.0 + i + 7 * j, 99.0, 1.5)
    return rep


class TestReport:
    def test_table4_averages(self):
        t4 = load_table4()
        assert len(t4.scripts) == 15 and len(t4.backends) == 5
        for kind, want in TABLE4_AVERAGES.items():
            assert t4.average(kind) / 1000 == pytest.approx(want, abs=0.0005)

    def test_average_row_identity(self):
        t4 = load_table4()
        for b in t4.backends:
            means = t4.script_means(b)
            assert t4.average(b) == math.fsum(means) / len(means)

    def test_markdown_layout(self):
        md = emit_report(load_table4(), "md")
        rows = [l for l in md.splitlines() if l.startswith("|")]
        assert rows[0] == "| Row | Operations | Hash | Binary Tree | Link List | Static Array | Set |"
        assert len(rows) == 2 + 15 + 1
        assert rows[-1].startswith("|  | The Average Time | 96.000 |")
        assert "One-way ANOVA" in md

    def test_empty_backends_header_only(self):
        rep = BenchReport(parse_scripts("all"), [])
        assert emit_report(rep, "csv") == "script,backend,mean_ns,median_ns,stddev_ns\n"
        md = emit_report(rep, "md").strip().splitlines()
        assert md == ["| Row | Operations |", "|---|---|"]

    def test_csv_round_trip(self):
        rep = _tiny_report()
        back = parse_csv(emit_report(rep, "csv"))
        assert back.backends == rep.backends
        assert [s.mnemonic for s in back.scripts] == ["ILD", "III"]
        assert back.f_test().F == rep.f_test().F

    def test_bench_csv_round_trip(self):
        rep = run_bench([BackendKind.HASH, BackendKind.BITMASK_SET, BackendKind.LINKED_LIST],
                        parse_scripts("ILD,LLL,DDI"), repetitions=20, warmup=2, pin=False)
        back = parse_csv(emit_report(rep, "csv"))
        assert back.f_test().F == rep.f_test().F
        for key, cell in rep.cells.items():
            assert back.cells[key].mean_ns == cell.mean_ns
            assert back.cells[key].stddev_ns == cell.stddev_ns

    @pytest.mark.parametrize("text,where", [
        ("", "line 1"),
        ("a,b,c\n", "line 1"),
        ("script,backend,mean_ns,median_ns,stddev_ns\nILD,hash,1,1\n", "line 2"),
        ("script,backend,mean_ns,median_ns,stddev_ns\nXYZ,hash,1,1,1\n", "line 2, column script"),
        ("script,backend,mean_ns,median_ns,stddev_ns\nILD,btree,1,1,1\n", "line 2, column backend"),
        ("script,backend,mean_ns,median_ns,stddev_ns\nILD,hash,1,1,1\nILD,set,x,1,1\n", "line 3, column mean_ns"),
        ("script,backend,mean_ns,median_ns,stddev_ns\nILD,hash,1,1,1\nILD,hash,1,1,1\n", "line 3"),
        ("script,backend,mean_ns,median_ns,stddev_ns\nILD,hash,1,1,1\nIII,set,1,1,1\n", "missing row"),
    ])
    def test_parse_errors(self, text, where):
        with pytest.raises(ReportFormatError, match=where):
            parse_csv(text)

    def test_observation_one_needs_four_backends(self):
        assert observation_one(_tiny_report()) is None
        ok, line = observation_one(load_table4())
        assert ok and line.startswith("PASS")
