"""
已拟合的回归模型
拟合后不可变，可在线程间共享；均可导出为 JSON 字典并还原
"""
from functools import cached_property
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

LEAF = -1


class LinearModel(BaseModel):
    """多元线性回归：截距 + 每个预测变量一个系数（被剔除的常数列系数为 0）"""
    model_config = ConfigDict(frozen=True)

    predictor_names: List[str]
    intercept: float
    coefficients: List[float]
    dropped_columns: List[str] = Field(default_factory=list, description="训练时为常数、被截距吸收的列")

    @model_validator(mode='after')
    def validate_shape(self):
        if len(self.coefficients) != len(self.predictor_names):
            raise ValueError('系数个数与预测变量个数不一致')
        return self

    def predict(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        return self.intercept + X @ np.asarray(self.coefficients, dtype=float)

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LinearModel":
        return cls.model_validate(data)


class RegressionTree(BaseModel):
    """
    二叉回归树，节点以平行数组存储，0 号为根
    内部节点 feature >= 0，样本满足 x[feature] <= threshold 时进入左子树；叶节点 feature = -1
    """
    model_config = ConfigDict(frozen=True)

    feature: List[int]
    threshold: List[float]
    left: List[int]
    right: List[int]
    value: List[float] = Field(..., description="节点训练目标均值，叶节点即预测值")
    gain: List[float] = Field(..., description="分裂带来的平方误差下降，叶节点为 0")
    n_samples: List[int]

    @model_validator(mode='after')
    def validate_arrays(self):
        n = len(self.feature)
        if n == 0:
            raise ValueError('回归树至少包含一个节点')
        for name in ('threshold', 'left', 'right', 'value', 'gain', 'n_samples'):
            if len(getattr(self, name)) != n:
                raise ValueError(f'{name} 的长度与节点数不一致')
        return self

    @property
    def n_nodes(self) -> int:
        return len(self.feature)

    @property
    def n_leaves(self) -> int:
        return sum(1 for f in self.feature if f == LEAF)

    @cached_property
    def node_arrays(self):
        """节点数组的 numpy 形式"""
        return (
            np.asarray(self.feature, dtype=np.int64),
            np.asarray(self.threshold, dtype=float),
            np.asarray(self.left, dtype=np.int64),
            np.asarray(self.right, dtype=np.int64),
            np.asarray(self.value, dtype=float),
        )

    def apply(self, X: np.ndarray) -> np.ndarray:
        """每个样本落入的叶节点编号"""
        X = np.asarray(X, dtype=float)
        feature, threshold, left, right, _ = self.node_arrays
        node = np.zeros(len(X), dtype=np.int64)
        active = np.flatnonzero(feature[node] != LEAF)
        while len(active):
            current = node[active]
            go_left = X[active, feature[current]] <= threshold[current]
            node[active] = np.where(go_left, left[current], right[current])
            active = active[feature[node[active]] != LEAF]
        return node

    def predict(self, X: np.ndarray) -> np.ndarray:
        return self.node_arrays[4][self.apply(X)]

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RegressionTree":
        return cls.model_validate(data)


class GradientBoostingModel(BaseModel):
    """梯度提升回归树：prediction(x) = f0 + shrinkage × Σ tree_i(x)"""
    model_config = ConfigDict(frozen=True)

    predictor_names: List[str]
    f0: float = Field(..., description="初始常数（训练目标均值）")
    shrinkage: float = Field(..., gt=0, le=1)
    trees: List[RegressionTree] = Field(default_factory=list)
    train_mse: List[float] = Field(default_factory=list, description="第 0..n_stages 轮后的训练均方误差")

    def stage_sum(self, X: np.ndarray) -> np.ndarray:
        """Σ tree_i(x)"""
        X = np.asarray(X, dtype=float)
        total = np.zeros(len(X))
        for tree in self.trees:
            total += tree.predict(X)
        return total

    def predict(self, X: np.ndarray) -> np.ndarray:
        return self.f0 + self.shrinkage * self.stage_sum(X)

    def feature_importance(self) -> Optional[Dict[str, float]]:
        """各预测变量分裂增益之和，归一化为 1；没有任何分裂时为 None"""
        totals = np.zeros(len(self.predictor_names))
        for tree in self.trees:
            for feature, gain in zip(tree.feature, tree.gain):
                if feature != LEAF:
                    totals[feature] += gain
        overall = totals.sum()
        if overall <= 0:
            return None
        return {name: float(v / overall) for name, v in zip(self.predictor_names, totals)}

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GradientBoostingModel":
        return cls.model_validate(data)
