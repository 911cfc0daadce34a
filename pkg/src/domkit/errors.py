"""Exception hierarchy. Every error raised by the toolkit derives from DomkitError."""


class DomkitError(Exception):
    pass


class GraphError(DomkitError, ValueError):
    """Invalid graph construction input (bad id, self-loop, bad parameters)."""


class ParseError(DomkitError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotBipartiteError(DomkitError, ValueError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(
            f"graph is not bipartite; odd cycle: {' '.join(map(str, self.cycle))}"
        )


class NotDominatingError(DomkitError, ValueError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"set is not dominating; vertex {vertex} is undominated")


class OracleCapExceeded(DomkitError, ValueError):
    """Graph too large for brute-force enumeration; use branch-and-bound."""
