"""
Error types shared by the services
"""


class DomainError(ValueError):
    """An operation was called outside its documented domain"""


class EvaluationError(ValueError):
    """A sampled function produced a non-finite value"""


def require(condition: bool, message: str, *args: object) -> None:
    """Raise DomainError unless condition holds; message is %-formatted with args only on failure"""
    if not condition:
        raise DomainError(message % args if args else message)
