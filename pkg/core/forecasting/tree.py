"""
回归树（平方误差，贪心自顶向下）

每个特征只排序一次；节点内用中心化目标的前缀和在 O(m) 内评估全部候选分裂。
阈值取相邻两个不同取值的中点，x <= 阈值进入左子树。
分裂质量在容差内相同时，先取特征编号小的，再取阈值小的。
"""
from typing import Optional, Tuple

import numpy as np

from models.regression import LEAF, RegressionTree


class _TreeBuilder:
    """逐节点追加到平行数组中"""

    def __init__(self, X: np.ndarray, y: np.ndarray, max_depth: int, min_samples_leaf: int):
        self.X = X
        self.y = y
        self.max_depth = max_depth
        self.min_samples_leaf = min_samples_leaf
        self.orders = [np.argsort(X[:, j], kind='stable') for j in range(X.shape[1])]
        self.nodes = {name: [] for name in ('feature', 'threshold', 'left', 'right', 'value', 'gain', 'n_samples')}

    def _add_node(self, value: float, n_samples: int) -> int:
        node = len(self.nodes['feature'])
        self.nodes['feature'].append(LEAF)
        self.nodes['threshold'].append(0.0)
        self.nodes['left'].append(LEAF)
        self.nodes['right'].append(LEAF)
        self.nodes['value'].append(value)
        self.nodes['gain'].append(0.0)
        self.nodes['n_samples'].append(n_samples)
        return node

    def best_split(self, in_node: np.ndarray, m: int) -> Optional[Tuple[int, float, float]]:
        """
        返回 (特征, 阈值, 增益)，没有可行分裂时返回 None
        增益 = 父节点 SSE - 两个子节点 SSE 之和
        """
        y_node = self.y[in_node]
        centered_total = y_node - y_node.mean()
        sse_parent = float(np.dot(centered_total, centered_total))
        tol = 1e-10 * (1.0 + sse_parent)
        if sse_parent <= tol:
            return None

        mean = y_node.mean()
        leaf = self.min_samples_leaf
        candidates = []
        for j, order in enumerate(self.orders):
            # 预排序下标中只保留本节点的样本
            idx = order[in_node[order]]
            xs = self.X[idx, j]
            prefix = np.cumsum(self.y[idx] - mean)[:-1]
            sizes = np.arange(1, m)
            # 中心化后左右两侧和互为相反数，子节点 SSE 的下降量 = S_L^2 * m / (i (m - i))
            gains = prefix * prefix * m / (sizes * (m - sizes))
            # 相同取值之间不能切分
            valid = (xs[:-1] < xs[1:]) & (sizes >= leaf) & (m - sizes >= leaf)
            if not valid.any():
                continue
            positions = np.flatnonzero(valid)
            lo, hi = xs[positions], xs[positions + 1]
            thresholds = (lo + hi) / 2.0
            # 中点在浮点上可能等于右侧取值
            thresholds = np.where(thresholds < hi, thresholds, lo)
            candidates.append((j, gains[positions], thresholds))

        if not candidates:
            return None
        best = max(float(g.max()) for _, g, _ in candidates)
        if best <= tol:
            return None
        # 增益持平时先取编号小的特征，再取小的阈值
        for j, gains, thresholds in candidates:
            near = gains >= best - tol
            if near.any():
                k = np.flatnonzero(near)[np.argmin(thresholds[near])]
                return j, float(thresholds[k]), float(gains[k])
        return None

    def build(self, in_node: np.ndarray, depth: int) -> int:
        m = int(in_node.sum())
        node = self._add_node(float(self.y[in_node].mean()), m)
        if depth >= self.max_depth or m < 2 * self.min_samples_leaf:
            return node
        split = self.best_split(in_node, m)
        if split is None:
            return node
        feature, threshold, gain = split
        goes_left = self.X[:, feature] <= threshold
        left = self.build(in_node & goes_left, depth + 1)
        right = self.build(in_node & ~goes_left, depth + 1)
        self.nodes['feature'][node] = feature
        self.nodes['threshold'][node] = threshold
        self.nodes['left'][node] = left
        self.nodes['right'][node] = right
        self.nodes['gain'][node] = gain
        return node


def fit_regression_tree(
    X: np.ndarray,
    y: np.ndarray,
    max_depth: int = 3,
    min_samples_leaf: int = 1,
) -> RegressionTree:
    """
    拟合回归树

    Args:
        X: (n, p) 预测变量矩阵，n >= 1
        y: (n,) 目标
        max_depth: 最大深度，0 表示只有根叶节点
        min_samples_leaf: 每个叶节点的最少样本数

    Returns:
        RegressionTree，叶节点值为落入该叶的训练目标均值
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or len(X) != len(y) or len(y) == 0:
        raise ValueError('X 必须是 (n, p) 矩阵且 n = len(y) >= 1')
    builder = _TreeBuilder(X, y, max_depth, min_samples_leaf)
    builder.build(np.ones(len(y), dtype=bool), 0)
    return RegressionTree(**builder.nodes)

