"""
预测模型配置
ModelSpec 是判别联合类型，kind 决定具体的模型变体
"""
from typing import Annotated, Literal, Union
from pydantic import BaseModel, Field

from settings import GBR_CONFIG


class GradientBoostingParams(BaseModel):
    """梯度提升回归树参数（未做网格搜索，使用常见默认值）"""
    n_stages: int = Field(default=GBR_CONFIG["n_stages"], ge=0, description="提升轮数")
    shrinkage: float = Field(default=GBR_CONFIG["shrinkage"], gt=0, le=1, description="学习率")
    max_depth: int = Field(default=GBR_CONFIG["max_depth"], ge=1, description="单棵树最大深度")
    min_samples_leaf: int = Field(default=GBR_CONFIG["min_samples_leaf"], ge=1, description="叶节点最少样本数")


class _SpecBase(BaseModel):
    key: str = Field(..., min_length=1, description="唯一标识，用于报告列名和仿真的预测来源")
    label: str = Field(default="", description="报告中显示的名称")

    @property
    def display_name(self) -> str:
        return self.label or self.key

    @property
    def requires_training(self) -> bool:
        return False


class NaiveSpec(_SpecBase):
    """朴素预测：取前一个营业日的值"""
    kind: Literal['naive'] = 'naive'


class SeasonalNaiveSpec(_SpecBase):
    """季节朴素预测：取 m 个营业日之前的值"""
    kind: Literal['seasonal_naive'] = 'seasonal_naive'
    m: int = Field(default=6, ge=1, description="季节周期（营业日）")


class SeasonalMovingAverageSpec(_SpecBase):
    """季节移动平均：此前 x 个同星期几的均值"""
    kind: Literal['seasonal_moving_average'] = 'seasonal_moving_average'
    x: int = Field(default=5, ge=1, description="窗口（周）")


class LinearRegressionSpec(_SpecBase):
    """多元线性回归（最小二乘）"""
    kind: Literal['linear_regression'] = 'linear_regression'

    @property
    def requires_training(self) -> bool:
        return True


class GradientBoostingSpec(_SpecBase):
    """梯度提升回归树"""
    kind: Literal['gradient_boosting'] = 'gradient_boosting'
    params: GradientBoostingParams = Field(default_factory=GradientBoostingParams)

    @property
    def requires_training(self) -> bool:
        return True


ModelSpec = Annotated[
    Union[NaiveSpec, SeasonalNaiveSpec, SeasonalMovingAverageSpec, LinearRegressionSpec, GradientBoostingSpec],
    Field(discriminator='kind'),
]
