"""
词表、平滑语言模型、KL 散度与参考模型测试

随机对照使用直接按公式写出的纯 Python 实现。
"""

import math
import random
from collections import Counter

import numpy as np
import pytest

from conftest import build_corpus, build_user
from psycholex.common.exceptions import VocabularyError
from psycholex.openvocab import (
    Nearest,
    Vocabulary,
    build_language_model,
    build_pair_models,
    build_vocabulary,
    distinctive_words,
    jaccard,
    kl_divergence,
    rank_curves,
    reference_experiment,
    reference_lm_score,
    union_collection,
)


def vocab(label, text):
    return Vocabulary(label, Counter(text.split()))


def brute_lm(d_counts, s_counts, smoothing):
    d_total = sum(d_counts.values())
    s_total = sum(s_counts.values())
    return {w: (1 - smoothing) * d_counts.get(w, 0) / d_total + smoothing * s_counts[w] / s_total
            for w in s_counts}


def brute_kl(p, c):
    return sum(p[w] * math.log(p[w] / c[w]) for w in p)


def random_counts(rng, alphabet, max_words=6):
    words = rng.sample(alphabet, rng.randint(1, max_words))
    return Counter({w: rng.randint(1, 5) for w in words})


# ------------------------------------------------------------------ 词表

def test_jaccard_counts():
    p = vocab("p", "a b c c")
    c = vocab("c", "b c d")
    result = jaccard(p, c)
    assert (result.intersection, result.union) == (2, 4)
    assert result.jaccard == pytest.approx(0.5)
    assert (result.only_positive, result.only_control) == (1, 1)


def test_jaccard_empty_sets():
    assert jaccard(Vocabulary("p", {}), Vocabulary("c", {})).jaccard is None


def test_jaccard_random_oracle():
    rng = random.Random(11)
    alphabet = list("abcdefghij")
    for _ in range(200):
        p = Vocabulary("p", random_counts(rng, alphabet))
        c = Vocabulary("c", random_counts(rng, alphabet))
        ps, cs = set(p.counts), set(c.counts)
        result = jaccard(p, c)
        assert result.jaccard == pytest.approx(len(ps & cs) / len(ps | cs), rel=1e-9)
        assert jaccard(c, p).jaccard == result.jaccard
        assert result.union == result.positive_size + result.control_size - result.intersection


def test_build_vocabulary_uses_normalized_words():
    corpus = build_corpus({"p": {"u": ["I love #Music", "i LOVE it"]}})
    vocabulary = build_vocabulary(corpus, "p")
    assert vocabulary.counts["i"] == 2
    assert vocabulary.counts["love"] == 2
    assert vocabulary.counts["music"] == 1
    assert vocabulary.total_tokens == 6


def test_union_collection_adds_counts():
    merged = union_collection([vocab("p", "a a b"), vocab("c", "b c")])
    assert dict(merged.counts) == {"a": 2, "b": 2, "c": 1}
    assert merged.class_label == "p+c"
    assert merged.total_tokens == 5
    with pytest.raises(VocabularyError):
        union_collection([])


def test_vocabulary_merge_is_multiset_union():
    merged = vocab("p", "a a b").merge(vocab("c", "b c"), class_label="all")
    assert merged.class_label == "all"
    assert dict(merged.counts) == {"a": 2, "b": 2, "c": 1}
    assert vocab("p", "a").merge(vocab("c", "b")).class_label == "p+c"


def test_distinctive_words():
    p = vocab("p", "sad sad sad numb numb fine")
    c = vocab("c", "fine good")
    assert distinctive_words(p, c, top_n=1) == [("sad", 3)]


# ------------------------------------------------------------------ 语言模型

def test_hand_computed_probability():
    model = build_language_model(vocab("d", "a a b"), vocab("s", "a a b b"), smoothing=0.5)
    assert model.prob("a") == pytest.approx(7 / 12, abs=1e-9)
    assert model.prob("b") == pytest.approx(5 / 12, abs=1e-9)


def test_lm_matches_formula():
    rng = random.Random(5)
    alphabet = [f"w{i}" for i in range(12)]
    for _ in range(200):
        d = random_counts(rng, alphabet)
        s = d + random_counts(rng, alphabet)
        smoothing = rng.choice([0.05, 0.1, 0.5, 0.9])
        model = build_language_model(Vocabulary("d", d), Vocabulary("s", s), smoothing)
        expected = brute_lm(d, s, smoothing)
        for word, p in model.as_dict().items():
            assert p == pytest.approx(expected[word], rel=1e-9)


@pytest.mark.parametrize("smoothing", [0.05, 0.1, 0.5, 0.9])
def test_lm_normalization(smoothing):
    rng = random.Random(int(smoothing * 100))
    alphabet = [f"w{i}" for i in range(30)]
    for _ in range(250):
        d = random_counts(rng, alphabet, 15)
        s = d + random_counts(rng, alphabet, 15)
        model = build_language_model(Vocabulary("d", d), Vocabulary("s", s), smoothing)
        assert float(model.probs.sum()) == pytest.approx(1.0, abs=1e-9)
        assert np.all(model.probs > 0)


@pytest.mark.parametrize("smoothing", [0.0, 1.0, -0.1])
def test_lambda_range(smoothing):
    with pytest.raises(VocabularyError):
        build_language_model(vocab("d", "a"), vocab("s", "a"), smoothing)


def test_target_outside_collection():
    with pytest.raises(VocabularyError):
        build_language_model(vocab("d", "a z"), vocab("s", "a b"), 0.1)


def test_empty_target():
    with pytest.raises(VocabularyError):
        build_language_model(Vocabulary("d", {}), vocab("s", "a b"), 0.1)


# ------------------------------------------------------------------ KL 散度

def _model(label, support, probs):
    from psycholex.openvocab import LanguageModel
    probs = np.asarray(probs, dtype=float)
    return LanguageModel(label, "s", tuple(support), probs, probs, 0.1)


def test_hand_computed_kl():
    p = _model("p", "ab", [0.75, 0.25])
    c = _model("c", "ab", [0.5, 0.5])
    assert kl_divergence(p, c) == pytest.approx(0.130812, abs=1e-6)
    assert kl_divergence(p, c, log_base=2.0) == pytest.approx(0.130812 / math.log(2), abs=1e-6)


def test_kl_zero_iff_identical():
    p = _model("p", "ab", [0.75, 0.25])
    assert kl_divergence(p, p) == 0.0
    assert kl_divergence(p, _model("c", "ab", [0.7, 0.3])) > 0.0


def test_kl_support_mismatch():
    with pytest.raises(VocabularyError):
        kl_divergence(_model("p", "ab", [0.5, 0.5]), _model("c", "ac", [0.5, 0.5]))


def test_kl_matches_formula():
    rng = random.Random(23)
    alphabet = [f"w{i}" for i in range(10)]
    for _ in range(200):
        p_counts = random_counts(rng, alphabet)
        c_counts = random_counts(rng, alphabet)
        models = build_pair_models(Vocabulary("p", p_counts), Vocabulary("c", c_counts), 0.1)
        value = kl_divergence(models.positive_model, models.control_model)
        expected = brute_kl(models.positive_model.as_dict(), models.control_model.as_dict())
        assert value == pytest.approx(max(expected, 0.0), rel=1e-9, abs=1e-15)
        assert value >= 0.0


def test_kl_is_asymmetric():
    models = build_pair_models(vocab("p", "a a a b"), vocab("c", "a b b c c c"), 0.1)
    forward = kl_divergence(models.positive_model, models.control_model)
    backward = kl_divergence(models.control_model, models.positive_model)
    assert forward != pytest.approx(backward)


# ------------------------------------------------------------------ 参考模型

def test_reference_score_picks_nearest():
    models = build_pair_models(vocab("p", "sad sad tired alone"), vocab("c", "game win fun friends"), 0.1)
    sad_user = build_user("u1", "p", ["sad tired", "alone sad"])
    score = reference_lm_score(sad_user, models.positive_model, models.control_model)
    assert score.nearest is Nearest.POSITIVE
    assert score.kl_to_positive < score.kl_to_control


def test_reference_score_ignores_unknown_words():
    models = build_pair_models(vocab("p", "sad tired"), vocab("c", "game win"), 0.1)
    user = build_user("u1", "c", ["unseen words only"])
    assert reference_lm_score(user, models.positive_model, models.control_model) is None


def test_reference_tie_goes_to_control():
    models = build_pair_models(vocab("p", "a b"), vocab("c", "a b"), 0.1)
    user = build_user("u1", "p", ["a b"])
    assert reference_lm_score(user, models.positive_model, models.control_model).nearest is Nearest.CONTROL


def test_reference_argmin_invariant_under_duplication():
    models = build_pair_models(vocab("p", "sad sad tired alone"), vocab("c", "game win fun sad"), 0.1)
    once = build_user("u1", "p", ["sad game", "tired"])
    twice = build_user("u1", "p", ["sad game", "tired", "sad game", "tired"])
    first = reference_lm_score(once, models.positive_model, models.control_model)
    second = reference_lm_score(twice, models.positive_model, models.control_model)
    assert first.nearest is second.nearest
    assert first.kl_to_positive == pytest.approx(second.kl_to_positive)


def test_reference_experiment(toy_corpus):
    experiment = reference_experiment(toy_corpus, "depression", "control", fraction=1.0, seed=1)
    means = experiment.class_means()
    assert set(means) == {"depression", "control"}
    assert means["depression"]["users"] == 3.0
    assert 0.0 <= means["control"]["nearest_positive"] <= 1.0


def test_rank_curves():
    models = build_pair_models(vocab("p", "a a a b"), vocab("c", "b b c"), 0.1)
    curves = rank_curves([models.positive_model, models.control_model], top_n=2)
    # 集合中 a 与 b 各 3 次，并列时按字典序
    assert curves.words == ("a", "b")
    assert set(curves.series) == {"p", "c"}
    assert curves.series["p"][0] == pytest.approx(models.positive_model.prob("a"))
