"""Exception types shared across the package."""


class PureFieldError(ValueError):
    """Base class for rejected inputs."""


class ReducibleError(PureFieldError):
    def __init__(self, n, a):
        super().__init__(f"x^{n} - ({a}) is reducible over Q")
        self.n = n
        self.a = a


class HypothesisError(PureFieldError):
    """A prime p | n divides a to a power that is itself divisible by p."""

    def __init__(self, prime, valuation):
        super().__init__(
            f"v_{prime}(a) = {valuation} is divisible by {prime}; "
            "the discriminant formula does not apply"
        )
        self.prime = prime
        self.valuation = valuation


class OreRegularityError(ArithmeticError):
    """Some residual polynomial is not separable, so the lattice count is not the index."""

    def __init__(self, prime, residual=None):
        super().__init__(f"Ore regularity fails at p = {prime}")
        self.prime = prime
        self.residual = residual
