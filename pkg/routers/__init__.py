from .generate import generate_command
from .evaluate import eval_command
from .simulate import simulate_command
from .report import report_command
from .generalize import generalize_command

__all__ = ['generate_command', 'eval_command', 'simulate_command', 'report_command', 'generalize_command']
