"""
发帖间隔与互动行为画像测试
"""

import math
import random

import pytest

from conftest import build_corpus, build_user
from psycholex.behavior import (
    GapAccumulator,
    MonthlyGapTable,
    accumulate_gaps,
    behavior_features,
    behavior_profiles,
    feature_sample,
    mean_time_gap,
    merge_monthly,
    monthly_gap_table,
)
from psycholex.behavior import timegap
from psycholex.common.exceptions import ConfigurationError
from psycholex.corpus import Corpus, Platform


DAY = 86400.0


def test_uniform_gaps():
    user = build_user("u", "p", ["a", "b", "c"], offsets=[0, 3600, 7200])
    assert mean_time_gap(user) == pytest.approx(3600.0)


def test_uneven_gaps():
    user = build_user("u", "p", ["a", "b", "c"], offsets=[0, 100, 400])
    assert mean_time_gap(user) == pytest.approx(200.0)


def test_single_document_has_no_gap():
    assert mean_time_gap(build_user("u", "p", ["a"])) is None


def test_mean_gap_random_oracle():
    rng = random.Random(3)
    for _ in range(200):
        offsets = sorted(rng.sample(range(0, 10 ** 6), rng.randint(2, 8)))
        user = build_user("u", "p", ["x"] * len(offsets), offsets=offsets)
        gaps = [b - a for a, b in zip(offsets, offsets[1:])]
        assert mean_time_gap(user) == pytest.approx(sum(gaps) / len(gaps), rel=1e-9)


def test_january_cell():
    # 两个一月间隔 100 与 300 秒
    corpus = Corpus({"p": (
        build_user("u1", "p", ["a", "b"], offsets=[0, 100]),
        build_user("u2", "p", ["a", "b"], offsets=[DAY, DAY + 300]),
    )}, Platform.TWITTER)
    table = monthly_gap_table(corpus, ["p"])
    cell = table.cell("p", 1)
    assert cell.mean == pytest.approx(200.0, abs=1e-6)
    assert cell.std == pytest.approx(100.0, abs=1e-6)
    assert cell.count == 2
    assert table.cell("p", 2) is None


def test_gap_goes_to_earlier_month():
    # 1 月 31 日 -> 2 月 1 日
    user = build_user("u", "p", ["a", "b"], offsets=[30 * DAY + 3600, 31 * DAY + 3600])
    table = monthly_gap_table(Corpus({"p": (user,)}, Platform.TWITTER), ["p"])
    assert table.cell("p", 1).count == 1
    assert table.cell("p", 2) is None


def test_monthly_table_needs_classes(toy_corpus):
    with pytest.raises(ConfigurationError) as info:
        monthly_gap_table(toy_corpus, [])
    assert info.value.error_code == 1007


def _random_cohort(rng, label, users, start=0.0):
    profiles = []
    for u in range(users):
        n = rng.randint(1, 12)
        offsets = sorted(start + rng.randrange(int(300 * DAY)) for _ in range(n))
        profiles.append(build_user(f"{label}{u}", label, ["x"] * n, offsets=offsets))
    return tuple(profiles)


def test_gap_counts_sum_to_documents_minus_one():
    rng = random.Random(17)
    cohort = _random_cohort(rng, "p", 30)
    table = monthly_gap_table(Corpus({"p": cohort}, Platform.TWITTER), ["p"])
    total = sum(cell.count for cell in table.cells["p"].values())
    assert total == sum(len(u.documents) - 1 for u in cohort)


def test_gaps_invariant_under_time_shift():
    # 向前平移整一年 (2018 年无闰日)，月份归属不变
    rng = random.Random(23)
    offsets = sorted(rng.randrange(int(300 * DAY)) for _ in range(15))
    year = 365 * DAY
    base = build_user("u", "p", ["x"] * 15, offsets=offsets)
    shifted = build_user("u", "p", ["x"] * 15, offsets=[o - year for o in offsets])
    assert mean_time_gap(shifted) == pytest.approx(mean_time_gap(base), rel=1e-12)
    table = monthly_gap_table(Corpus({"p": (base,)}, Platform.TWITTER), ["p"])
    moved = monthly_gap_table(Corpus({"p": (shifted,)}, Platform.TWITTER), ["p"])
    assert set(table.cells["p"]) == set(moved.cells["p"])
    for month, cell in table.cells["p"].items():
        other = moved.cell("p", month)
        assert other.count == cell.count
        assert other.mean == pytest.approx(cell.mean, rel=1e-9)
        assert other.std == pytest.approx(cell.std, rel=1e-9, abs=1e-6)


def test_chunked_table_matches_single_pass(monkeypatch):
    rng = random.Random(5)
    corpus = Corpus({"p": _random_cohort(rng, "p", 40)}, Platform.TWITTER)
    single = merge_monthly([accumulate_gaps(corpus.cohort("p"))])
    monkeypatch.setattr(timegap, "GAP_CHUNK_USERS", 7)
    calls = []

    def mapper(fn, chunks):
        calls.append(len(chunks))
        return [fn(chunk) for chunk in chunks]

    table = monthly_gap_table(corpus, ["p"], mapper=mapper)
    assert calls == [6]
    for month, acc in single.items():
        cell = table.cell("p", month)
        assert cell.count == acc.count
        assert cell.mean == pytest.approx(acc.mean, rel=1e-9)
        assert cell.std == pytest.approx(acc.population_std, rel=1e-9)


def test_monthly_table_round_trip_and_rows():
    user = build_user("u", "p", ["a", "b", "c"], offsets=[0, 7200, 14400])
    table = monthly_gap_table(Corpus({"p": (user,)}, Platform.TWITTER), ["p"])
    assert MonthlyGapTable.from_dict(table.to_dict()) == table
    rows = table.rows()
    assert rows == [{"class_label": "p", "month": 1, "mean_gap_hours": 2.0,
                     "std_gap_hours": 0.0, "gaps": 2}]


def test_empty_table():
    user = build_user("u", "p", ["only one"])
    table = monthly_gap_table(Corpus({"p": (user,)}, Platform.TWITTER), ["p"])
    assert table.is_empty()


def test_accumulator_merge_is_associative():
    rng = random.Random(9)
    values = [rng.uniform(0, 1000) for _ in range(60)]
    parts = [values[:10], values[10:35], values[35:]]
    accumulators = []
    for part in parts:
        acc = GapAccumulator()
        for v in part:
            acc.add(v)
        accumulators.append(acc)
    left = accumulators[0].merge(accumulators[1]).merge(accumulators[2])
    right = accumulators[0].merge(accumulators[1].merge(accumulators[2]))
    mean = sum(values) / len(values)
    std = math.sqrt(sum((v - mean) ** 2 for v in values) / len(values))
    for merged in (left, right):
        assert merged.count == 60
        assert merged.mean == pytest.approx(mean, rel=1e-12)
        assert merged.population_std == pytest.approx(std, rel=1e-9)


def test_accumulator_merge_with_empty():
    acc = GapAccumulator()
    acc.add(5.0)
    assert GapAccumulator().merge(acc) == acc
    assert acc.merge(GapAccumulator()) == acc


def test_behavior_profile_fractions():
    corpus = build_corpus({"p": {"u1": ["#a hi", "@b hello", "RT @c: #d", "plain"]}})
    profile = behavior_profiles(corpus, "p")[0]
    assert profile.fractions["hashtags"] == pytest.approx(0.5)
    assert profile.fractions["mentions"] == pytest.approx(0.5)
    assert profile.fractions["retweet"] == pytest.approx(0.25)
    # 每篇文档比例的均值: 1/2, 0, 1/3, 0
    assert profile.hashtag_ratio == pytest.approx((0.5 + 1 / 3) / 4)
    assert profile.feature("submission_is_comment") is None
    assert profile.mean_gap_seconds == pytest.approx(3600.0)


def test_reddit_profile_has_no_retweet():
    user = build_user("u1", "p", ["hello", "reply"], platform=Platform.REDDIT,
                      submission_types=["post", "comment"])
    corpus = Corpus({"p": (user,)}, Platform.REDDIT)
    profile = behavior_profiles(corpus, "p")[0]
    assert profile.feature("retweet") is None
    assert profile.feature("submission_is_comment") == pytest.approx(0.5)


def test_behavior_features_per_platform():
    twitter = behavior_features("twitter")
    reddit = behavior_features("reddit")
    assert "retweet" in twitter and "submission_is_comment" not in twitter
    assert "submission_is_comment" in reddit and "retweet" not in reddit
    assert twitter[-3:] == ["hashtag_ratio", "mention_ratio", "mean_gap_seconds"]


def test_feature_sample_drops_missing_gaps():
    corpus = build_corpus({"p": {"u1": ["a"], "u2": ["a", "b"]}})
    profiles = behavior_profiles(corpus, "p")
    assert feature_sample(profiles, "mean_gap_seconds") == [3600.0]
    assert len(feature_sample(profiles, "hashtags")) == 2


def test_empty_user_excluded():
    corpus = Corpus({"p": (build_user("u1", "p", []), build_user("u2", "p", ["x"]))}, Platform.TWITTER)
    assert [p.user_id for p in behavior_profiles(corpus, "p")] == ["u2"]
