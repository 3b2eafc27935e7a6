from .experiment_manager import ExperimentManager

__all__ = ['ExperimentManager']
