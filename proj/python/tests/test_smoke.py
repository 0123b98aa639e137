import pytest

import geoconv


def test_formula_roundtrip_and_classes():
    f = geoconv.Formula("(forall x (imp (atom P x) (or (atom Q x) bot)))")
    assert str(f) == "(forall x (imp (atom P x) (or (atom Q x) bot)))"
    c = geoconv.classify(f)
    assert c.geometric_implication and c.Q
    assert not c.positive
    assert str(geoconv.e_translate("bot")) == "E"


def test_parse_error_is_raised():
    with pytest.raises(geoconv.ParseError):
        geoconv.Formula("(and (atom P a)")


def test_lemma_and_embeddings_check():
    for i in range(1, 9):
        args = ["(atom P a)"] if i == 1 else ["(atom P a)", "(atom Q a)"]
        d = geoconv.lemma(i, args)
        assert geoconv.check(d, geoconv.lemma_mode(i)) == []
    item8 = geoconv.lemma(8, ["(atom P a)", "(atom Q a)"])
    assert geoconv.check(item8, geoconv.Mode.minimal) != []
    d = geoconv.embed_q("(imp (atom P a) (exists x (atom Q x)))")
    assert geoconv.check(d, geoconv.Mode.intuitionistic) == []
    with pytest.raises(geoconv.PreconditionError):
        geoconv.embed_r("(atom P a)")


def test_corpus_transform():
    theories = geoconv.builtin_theories()
    samples = geoconv.builtin_samples()
    assert len(samples) >= 10
    name, theory, goal, proof = samples[0]
    steps = geoconv.transform(proof, theories[theory])
    assert [s[0] for s in steps] == ["input", "step1", "step2", "step3", "step4", "step5", "output"]
    out = steps[-1][2]
    assert out.succedent == [goal] and out.antecedent == []
    assert geoconv.check(out, geoconv.Mode.intuitionistic, theories[theory]) == []


def test_classical_sample_fails_intuitionistic_check():
    theories = geoconv.builtin_theories()
    for name, theory, goal, proof in geoconv.builtin_samples():
        if name == "toy-lem-excluded-middle":
            assert geoconv.check(proof, geoconv.Mode.classical, theories[theory]) == []
            assert geoconv.check(proof, geoconv.Mode.intuitionistic, theories[theory]) != []


def test_derivation_text_roundtrip():
    _, _, proof = geoconv.gen_family("ladder", 3)
    again = geoconv.Derivation(str(proof))
    assert str(again) == str(proof)
    assert again.size == proof.size


def test_bench_small(tmp_path):
    r = geoconv.bench("chain", 2, 6, tmp_path)
    assert r["rows"] == 5
    assert r["slope"] < 4
    assert (tmp_path / "bench.tsv").exists()
