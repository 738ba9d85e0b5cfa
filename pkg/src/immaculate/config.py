from dataclasses import dataclass


@dataclass
class Settings:
    # guard against runaway recursion; coefficients themselves are unbounded
    part_cap: int = 10**6
    # largest degree for which Imm<->H transition matrices are built
    max_degree: int = 8


settings = Settings()


class CompositionError(ValueError):
    pass


class IncomparableError(ValueError):
    """Raised when refinement is asked of compositions of different sizes."""


class KeyKindError(TypeError):
    pass


class DegreeCapError(RuntimeError):
    def __init__(self, degree, cap):
        super().__init__(f"degree {degree} exceeds the configured cap {cap}")
        self.degree = degree
        self.cap = cap
