"""
用户抽样与类别切分 (均由种子控制，可复现)
"""

from typing import List, Tuple

import numpy as np

from ..common.exceptions import IngestError
from .models import Corpus, UserProfile


def sample_users(corpus: Corpus, class_label: str, fraction: float, seed: int) -> List[UserProfile]:
    """按比例随机抽取用户，至少一个"""
    if not 0.0 < fraction <= 1.0:
        raise IngestError("Sample fraction must be in (0, 1]", details={"fraction": fraction})
    users = sorted(corpus.cohort(class_label), key=lambda u: u.user_id)
    if not users:
        return []
    size = max(1, int(round(len(users) * fraction)))
    rng = np.random.default_rng(seed)
    picked = sorted(rng.choice(len(users), size=size, replace=False).tolist())
    return [users[i] for i in picked]


def split_cohort(corpus: Corpus, class_label: str, seed: int) -> Tuple[List[UserProfile], List[UserProfile]]:
    """将一个类别随机对半切分"""
    users = sorted(corpus.cohort(class_label), key=lambda u: u.user_id)
    if len(users) < 2:
        raise IngestError("Cannot split a cohort with fewer than two users",
                          details={"class_label": class_label, "users": len(users)})
    order = np.random.default_rng(seed).permutation(len(users)).tolist()
    half = len(users) // 2
    first = sorted(order[:half])
    second = sorted(order[half:])
    return [users[i] for i in first], [users[i] for i in second]
