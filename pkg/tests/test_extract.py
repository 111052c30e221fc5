import pytest

from pumpkit import (
    BOTTOM,
    BUILTINS,
    Case1Witness,
    Case2Witness,
    ExtractionMode,
    GeneralTransition,
    LevelTriple,
    MinimalityViolationError,
    NoRepeatFoundError,
    NormalizedPda,
    NormalizedTransition,
    NotAcceptedError,
    RunPath,
    StrictPreconditionError,
    case1_decompose,
    case2_decompose,
    extract,
    minimal_accepting_path,
    normalize,
    pumping_params,
    verify_by_replay,
)


def single_word_machine():
    """Accepts exactly "a"; its one run has no repeats of any kind."""
    return NormalizedPda(
        states=["q0", "qa"],
        input_alphabet=["a"],
        stack_alphabet=[BOTTOM],
        initial_state="q0",
        initial_stack=[BOTTOM],
        accept_states=["qa"],
        transitions=[NormalizedTransition("q0", "a", BOTTOM, None, "qa")],
    )


class TestExtract:
    def test_best_effort_dyck1_golden(self, dyck1):
        res = extract(dyck1, "(((())))", mode=ExtractionMode.BEST_EFFORT)
        d = res.decomposition
        assert d.case == "case2"
        assert (d.u, d.v, d.x, d.y, d.z) == ("(", "(", "(())", ")", ")")
        w = d.witness
        assert isinstance(w, Case2Witness)
        assert (w.g, w.h) == (2, 3)
        assert (w.lp_g, w.lp_h, w.fp_h, w.fp_g) == (1, 2, 6, 7)
        assert res.diagnostics.level == 4
        assert res.diagnostics.level_witness == LevelTriple(0, 4, 8, 4)
        assert res.diagnostics.fallbacks == ()

    def test_strict_reg_ab_case1(self, reg_ab):
        word = "ab" * 17
        res = extract(reg_ab, word, mode=ExtractionMode.STRICT)
        d = res.decomposition
        assert d.case == "case1"
        assert isinstance(d.witness, Case1Witness)
        assert (d.witness.i, d.witness.j) == (0, 2)
        assert d.u == "" and d.v == "ab"
        assert d.x == "ab" * 16
        assert d.y == "" and d.z == ""
        assert res.diagnostics.mode == "strict"

    def test_strict_requires_long_word(self, dyck1):
        with pytest.raises(StrictPreconditionError) as exc:
            extract(dyck1, "(())", mode=ExtractionMode.STRICT)
        assert exc.value.word_length == 4
        assert exc.value.p == 13122

    def test_rejected_word(self, dyck1):
        with pytest.raises(NotAcceptedError):
            extract(dyck1, "(()", mode=ExtractionMode.BEST_EFFORT)

    def test_no_witness_reports_empty_scans(self):
        pda = single_word_machine()
        from pumpkit import NoWitnessError

        with pytest.raises(NoWitnessError) as exc:
            extract(pda, "a", mode=ExtractionMode.BEST_EFFORT)
        diag = exc.value.diagnostics
        assert diag is not None
        assert diag.level == 0
        assert diag.level_witness is None
        assert diag.config_pairs_available == 0
        assert diag.full_state_pairs_available == 0
        assert diag.case is None

    def test_best_effort_falls_back_to_case1(self, reg_ab):
        # level 1 and no equal full states on the triple, so the case-1 scan
        # over the whole path must supply the decomposition
        res = extract(reg_ab, "abab", mode=ExtractionMode.BEST_EFFORT)
        assert res.decomposition.case == "case1"
        assert res.decomposition.v == "ab"

    def test_decomposition_boundaries(self, dyck1):
        res = extract(dyck1, "(((())))", mode=ExtractionMode.BEST_EFFORT)
        assert res.decomposition.boundaries == (1, 2, 6, 7)

    def test_window_limits_strict_scan(self, dyck1):
        # strict mode on a word longer than p keeps the whole scan inside
        # the first p+1 positions
        word = "(" * 6601 + ")" * 6601
        res = extract(dyck1, word, mode=ExtractionMode.STRICT)
        assert res.diagnostics.window_end == 13122
        assert res.diagnostics.level == 6521
        assert res.diagnostics.level_witness == LevelTriple(80, 6601, 13122, 6521)
        w = res.decomposition.witness
        assert isinstance(w, Case2Witness)
        assert w.triple == LevelTriple(6593, 6601, 6609, 8)
        assert max(w.lp_g, w.lp_h, w.fp_h, w.fp_g) <= 13122

    def test_internal_replay_check_passes_for_all_candidates(self, anbn):
        res = extract(anbn, "a" * 6 + "b" * 6, mode=ExtractionMode.BEST_EFFORT)
        for n in (0, 1, 3):
            assert verify_by_replay(anbn, res.path, res.decomposition, n)


class TestCase1Decompose:
    def test_first_pair_semantics(self, reg_ab):
        path = minimal_accepting_path(reg_ab, "abab")
        params = pumping_params(reg_ab)
        d = case1_decompose(path, level=1, params=params)
        assert (d.witness.i, d.witness.j) == (0, 2)
        assert d.v == "ab"
        assert d.y == "" and d.z == ""

    def test_no_repeat(self):
        pda = single_word_machine()
        path = minimal_accepting_path(pda, "a")
        params = pumping_params(pda)
        with pytest.raises(NoRepeatFoundError):
            case1_decompose(path, level=0, params=params)

    def test_zero_letter_repeat_is_a_minimality_violation(self):
        # hand-built epsilon ramp: configurations at depth 0 repeat without
        # consuming input, which a minimal run must never do
        t1 = GeneralTransition("q0", None, BOTTOM, (BOTTOM, "A"), "q1")
        t2 = GeneralTransition("q1", None, "A", ("A", "A"), "q1")
        path = RunPath(
            word="",
            steps=(t1, t2, t2),
            profile=(1, 2, 3, 4),
            letters_read=(0, 0, 0, 0),
            initial_state="q0",
            initial_stack=(BOTTOM,),
        )
        params = pumping_params(single_word_machine())
        with pytest.raises(MinimalityViolationError):
            case1_decompose(path, level=0, params=params)


class TestCase2Decompose:
    def test_golden_first_pair(self, dyck1):
        path = minimal_accepting_path(dyck1, "(((())))")
        params = pumping_params(dyck1)
        d = case2_decompose(path, LevelTriple(0, 4, 8, 4), params)
        assert (d.witness.g, d.witness.h) == (2, 3)
        assert (d.u, d.v, d.x, d.y, d.z) == ("(", "(", "(())", ")", ")")

    def test_all_distinct_full_states(self):
        # each height carries a different symbol/state combination
        pda = NormalizedPda(
            states=["q0", "q1", "q2", "q3", "q4", "qf"],
            input_alphabet=["a", "b"],
            stack_alphabet=[BOTTOM, "X", "Y"],
            initial_state="q0",
            initial_stack=[BOTTOM],
            accept_states=["qf"],
            transitions=[
                NormalizedTransition("q0", "a", BOTTOM, "X", "q1"),
                NormalizedTransition("q1", "a", "X", "Y", "q2"),
                NormalizedTransition("q2", "b", "Y", None, "q3"),
                NormalizedTransition("q3", "b", "X", None, "q4"),
                NormalizedTransition("q4", None, BOTTOM, None, "qf"),
            ],
        )
        path = minimal_accepting_path(pda, "aabb")
        assert path.profile == (1, 2, 3, 2, 1, 0)
        with pytest.raises(NoRepeatFoundError):
            case2_decompose(path, LevelTriple(0, 2, 4, 2), pumping_params(pda))

    def test_zero_letter_pump_is_a_minimality_violation(self):
        # epsilon push/pop bump: heights 2 and 3 share a full state but the
        # pumped segments contain no input
        t_up1 = GeneralTransition("q", None, BOTTOM, (BOTTOM, "A"), "q")
        t_up2 = GeneralTransition("q", None, "A", ("A", "A"), "q")
        t_down = GeneralTransition("q", None, "A", (), "q")
        path = RunPath(
            word="",
            steps=(t_up1, t_up2, t_down, t_down),
            profile=(1, 2, 3, 2, 1),
            letters_read=(0, 0, 0, 0, 0),
            initial_state="q",
            initial_stack=(BOTTOM,),
        )
        params = pumping_params(single_word_machine())
        with pytest.raises(MinimalityViolationError):
            case2_decompose(path, LevelTriple(0, 2, 4, 2), params)


class TestOnNormalizedGeneralMachines:
    def test_gen_pal_best_effort(self, gen_pal):
        npda = normalize(gen_pal)
        word = "01" * 8 + "10" * 8
        res = extract(npda, word, mode=ExtractionMode.BEST_EFFORT)
        d = res.decomposition
        assert d.u + d.v + d.x + d.y + d.z == word
        assert len(d.v) + len(d.y) >= 1
        for n in (0, 2):
            assert verify_by_replay(npda, res.path, d, n)
