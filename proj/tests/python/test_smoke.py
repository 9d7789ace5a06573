import pytest

import kanex


def test_parse_and_inspect():
    ws = kanex.parse(kanex.shipped_example("two_plus_two"))
    assert ws.names == ["C", "A", "U", "X"]
    c = ws.category("C")
    assert c.objects == ["0", "0'", "1", "1'"]
    assert c.compose("i", "id_0") == "i"
    assert c.compose("i", "i'") is None
    assert ws.functor("U").object_map == {"0": "0", "0'": "0'"}


def test_two_plus_two_codensity():
    ws = kanex.parse(kanex.shipped_example("two_plus_two"))
    u = ws.functor("U")
    result = kanex.codensity_monad(u)
    assert result is not None
    assert result["pointwise"] is False
    assert result["monad"].endofunctor == kanex.identity_functor(u.target)
    assert kanex.left_adjoint(u) is None
    x = ws.concrete("X")
    assert kanex.is_beck(x)
    assert not kanex.is_monadic(x)


def test_chain_closure():
    ws = kanex.parse(kanex.shipped_example("chain_closure"))
    incl = ws.functor("Incl")
    adjoint = kanex.left_adjoint(incl)
    assert adjoint is not None
    assert adjoint["monad"] == ws.monad("M")
    assert kanex.codensity_monad(incl)["monad"] == ws.monad("M")
    pointwise = kanex.right_kan(incl, incl, method="pointwise")
    search = kanex.right_kan(incl, incl, method="search")
    assert pointwise["extension"] == search["extension"]
    assert pointwise["counit"] == search["counit"]
    m = ws.monad("M")
    em = kanex.em_category(m)
    assert kanex.concretely_identical(em, kanex.polymeric_variety(m.endofunctor, kanex.em_identities(m)))
    assert em.fibre("0") == []
    report = kanex.verify_beck_theorems(ws.concrete("X"), "X")
    assert report["verdict"] == "pass"
    assert kanex.verify_em_polymeric(m)["verdict"] == "pass"


def test_run_command():
    ws = kanex.parse(kanex.shipped_example("two_plus_two"))
    code, doc, text = kanex.run("codensity", ws, {"functor": "U"})
    assert code == 0
    assert doc["schema"] == kanex.JSON_SCHEMA_VERSION
    assert doc["result"]["identity"] is True
    assert "pointwise: false" in text
    code, doc, _ = kanex.run("adjoint", ws)
    assert code == 1
    code, doc, _ = kanex.run("codensity", ws, {"functor": "nope"})
    assert code == 2
    assert doc["error"]["kind"] == "UnknownName"


def test_errors_are_raised():
    with pytest.raises(kanex.DslError) as info:
        kanex.parse("category C {\n  objects: a\n  morphisms: f: a -> b\n}\n", "t.cat")
    assert "t.cat:3" in str(info.value)
    assert issubclass(kanex.DslError, kanex.KanexError)


def test_corpus_sweep():
    corpus = kanex.concrete_corpus(2, 2)
    assert len(corpus) > 5
    for name, x in corpus:
        assert kanex.verify_alg_universal_iff_codensity(x, name)["verdict"] == "pass"
