"""
X_rho^lambda as the induced trivial character of the Young subgroup S_lambda.

The cosets vS_lambda are encoded as label words: position k carries the block
of v^{-1}(k), S_lambda being embedded as consecutive blocks. v^{-1} w v lies in
S_lambda exactly when the word is constant along the cycles of w, so the value
is the number of words u with u[w(k)] = u[k] for all k.
"""

from collections import deque
from functools import lru_cache

import numpy as np

from combinatorics.partitions import Partition, require_same_weight
from combinatorics.permutations import class_representative


@lru_cache(maxsize=64)
def coset_labels(lam: Partition) -> np.ndarray:
    """
    One label word per coset of S_lambda, found breadth-first from the sorted word
    by swapping adjacent ascending pairs (each step lengthens the minimal coset
    representative by one). Rows are in discovery order, i.e. by length.
    """
    start = tuple(b for b, part in enumerate(lam.parts) for _ in range(part))
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for k in range(len(word) - 1):
            if word[k] < word[k + 1]:
                nxt = word[:k] + (word[k + 1], word[k]) + word[k + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
                    queue.append(nxt)
    labels = np.array(order, dtype=np.int8).reshape(len(order), len(start))
    labels.setflags(write=False)
    return labels


def induced_trivial_value(lam: Partition, rho: Partition) -> int:
    """ind_{S_lambda}^{S_n} 1 evaluated at the class rho, by counting fixed cosets"""
    require_same_weight(lam, rho)
    labels = coset_labels(lam)
    if labels.shape[1] == 0:
        return 1
    w = class_representative(rho)
    perm = np.array(w.images, dtype=np.intp) - 1
    return int(np.count_nonzero(np.all(labels[:, perm] == labels, axis=1)))
