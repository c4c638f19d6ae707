"""
用户互动行为画像

每个用户每个标记: 至少出现一次的文档所占比例；
另含话题标签/提及比例的文档均值与平均发帖间隔。
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional

import structlog

from ..corpus.models import Corpus, UserProfile
from ..textscan.markers import ENGAGEMENT_MARKERS, PLATFORM_ONLY_MARKERS
from .timegap import mean_time_gap


logger = structlog.get_logger(__name__)

RATIO_FEATURES = ("hashtag_ratio", "mention_ratio")


@dataclass(frozen=True)
class UserBehaviorProfile:
    """单个用户的行为特征"""
    user_id: str
    class_label: str
    documents: int
    fractions: Dict[str, float]
    hashtag_ratio: float
    mention_ratio: float
    mean_gap_seconds: Optional[float]
    not_applicable: FrozenSet[str] = field(default_factory=frozenset)

    def feature(self, name: str) -> Optional[float]:
        """按名称取特征值，不适用的平台标记返回 None"""
        if name in self.not_applicable:
            return None
        if name in RATIO_FEATURES:
            return getattr(self, name)
        if name == "mean_gap_seconds":
            return self.mean_gap_seconds
        return self.fractions[name]


def not_applicable_markers(platform: str) -> FrozenSet[str]:
    """该平台上无意义的标记"""
    return frozenset(
        marker for marker, only_on in PLATFORM_ONLY_MARKERS.items()
        if platform != only_on
    )


def user_behavior(user: UserProfile, class_label: str, platform: str) -> UserBehaviorProfile:
    n = len(user.documents)
    present = dict.fromkeys(ENGAGEMENT_MARKERS, 0)
    hashtag_total = 0.0
    mention_total = 0.0
    for doc in user.documents:
        markers = doc.scan.markers
        for marker in ENGAGEMENT_MARKERS:
            if markers.present(marker):
                present[marker] += 1
        hashtag_total += markers.hashtag_ratio
        mention_total += markers.mention_ratio

    excluded = not_applicable_markers(platform)
    fractions = {
        marker: (0.0 if marker in excluded else count / n)
        for marker, count in present.items()
    }
    return UserBehaviorProfile(
        user_id=user.user_id,
        class_label=class_label,
        documents=n,
        fractions=fractions,
        hashtag_ratio=hashtag_total / n,
        mention_ratio=mention_total / n,
        mean_gap_seconds=mean_time_gap(user),
        not_applicable=excluded,
    )


def behavior_profiles(corpus: Corpus, class_label: str) -> List[UserBehaviorProfile]:
    """类别内每个用户的行为画像，没有文档的用户被排除"""
    platform = corpus.platform.value
    profiles = []
    for user in corpus.cohort(class_label):
        if not user.documents:
            logger.warning("empty_user_excluded", user_id=user.user_id, class_label=class_label)
            continue
        profiles.append(user_behavior(user, class_label, platform))
    logger.info("behavior_profiles_built", class_label=class_label, users=len(profiles))
    return profiles


def behavior_features(platform: str) -> List[str]:
    """可比较的特征 (不含该平台不适用的标记)"""
    excluded = not_applicable_markers(platform)
    markers = [m for m in ENGAGEMENT_MARKERS if m not in excluded]
    return markers + list(RATIO_FEATURES) + ["mean_gap_seconds"]


def feature_sample(profiles: List[UserBehaviorProfile], name: str) -> List[float]:
    """取一组画像中某特征的有效值"""
    values = (profile.feature(name) for profile in profiles)
    return [v for v in values if v is not None]
