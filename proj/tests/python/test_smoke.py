# Copyright 2026 the grassroots contributors. Licensed under the Apache
# License, Version 2.0. See the LICENSE file at the root of this
# distribution or at http://www.apache.org/licenses/LICENSE-2.0
import pytest

import grassroots as gr


def test_platforms():
    assert gr.platforms() == ["gsn", "gc", "gf"]


def test_initial_config_shapes():
    assert gr.initial_config("gsn", 2) == {"a": "friends=", "b": "friends="}
    assert gr.initial_config("gc", ["p", "q"]) == {"p": "coins=", "q": "coins="}
    gf = gr.initial_config("gf", 1)
    assert gf == {"a": "graph=nodes:a;edges:"}


def test_enumerate_and_apply():
    config = gr.initial_config("gsn", 3)
    labels = gr.enumerate_enabled("gsn", config)
    assert labels == ["befriend a b", "befriend a c", "befriend b c"]
    after = gr.apply("gsn", config, "befriend a b")
    assert after["a"] == "friends=b"
    assert after["b"] == "friends=a"
    assert after["c"] == "friends="
    assert gr.is_enabled("gsn", after, "unfriend a b")
    assert not gr.is_enabled("gsn", after, "befriend a b")


def test_project():
    config = gr.apply("gsn", gr.initial_config("gsn", 3), "befriend a c")
    projected = gr.project(config, ["a", "b"])
    assert projected == {"a": "friends=c", "b": "friends="}


def test_simulate_replay_roundtrip():
    once = gr.simulate("gc", 4, steps=25, seed=11, max_mint=3, max_swap_size=3)
    again = gr.simulate("gc", 4, steps=25, seed=11, max_mint=3, max_swap_size=3)
    assert once["trace"] == again["trace"]
    assert once["hook_failure"] is None
    assert gr.replay(once["trace"]) == once["final"]
    ok, index, reason = gr.validate_run(once["trace"])
    assert ok, (index, reason)


def test_checks():
    ok, pair = gr.check_symmetry({"a": "friends=b", "b": "friends=a"})
    assert ok and pair is None
    ok, pair = gr.check_symmetry({"a": "friends=b", "b": "friends="})
    assert not ok and pair == ("a", "b")

    run = gr.simulate("gc", 3, steps=20, seed=3)
    ok, _, _ = gr.check_conservation(run["trace"])
    assert ok

    fed = gr.simulate("gf", 3, steps=15, seed=5)
    ok, _ = gr.check_valid(fed["final"])
    assert ok


def test_classify_swap():
    assert gr.classify_swap("swap a b x=b:2 y=") == "payment"
    assert gr.classify_swap("swap a b x=a:1 y=b:1") == "mutual-credit"
    assert gr.classify_swap("swap a b x=b:1 y=a:1") == "redemption"
    assert gr.classify_swap("swap a b x=b:2 y=a:1") == "other"


def test_modelcheck():
    report = gr.modelcheck("gsn", p=2, pprime=3, depth=2, mode="grassroots")
    assert report["pass"] is True
    assert report["counterexample"] is None
    assert report["max_witness_len"] <= 1


def test_errors_surface():
    with pytest.raises(gr.GrassrootsError):
        gr.apply("gsn", gr.initial_config("gsn", 2), "befriend a a")
    with pytest.raises(gr.GrassrootsError):
        gr.initial_config("nosuch", 2)
    with pytest.raises(gr.GrassrootsError):
        gr.enumerate_enabled("gsn", {"a": "coins=a:1", "b": "coins="})
    with pytest.raises(gr.GrassrootsError):
        gr.modelcheck("gsn", p=2, pprime=3, depth=9, mode="oblivious")
