# tridom/utils/errors.py
"""Exception hierarchy shared by every tridom sub-package."""


class TridomError(Exception):
    """Base class for all tridom errors."""


# --- Invalid input ---
class InvalidInstance(TridomError, ValueError):
    """The raw instance violates a structural invariant."""


class IntraClassArc(InvalidInstance):
    def __init__(self, arc: tuple[int, int], class_index: int):
        self.arc = arc
        self.class_index = class_index
        super().__init__(f"arc {arc} joins two vertices of class {class_index}")


class DuplicateArc(InvalidInstance):
    def __init__(self, arc: tuple[int, int]):
        self.arc = arc
        super().__init__(f"arc {arc} listed more than once")


class TwoCycle(InvalidInstance):
    def __init__(self, arc: tuple[int, int]):
        self.arc = arc
        super().__init__(f"arcs {arc} and {(arc[1], arc[0])} form a 2-cycle")


class UnassignedVertex(InvalidInstance):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} belongs to no class")


class EmptyClass(InvalidInstance):
    def __init__(self, class_index: int):
        self.class_index = class_index
        super().__init__(f"class {class_index} is empty")


class DuplicateClassMember(InvalidInstance):
    def __init__(self, vertex: int, class_index: int):
        self.vertex = vertex
        self.class_index = class_index
        super().__init__(f"vertex {vertex} listed again in class {class_index}")


class VertexOutOfRange(InvalidInstance):
    def __init__(self, vertex: int, num_vertices: int):
        self.vertex = vertex
        self.num_vertices = num_vertices
        super().__init__(f"vertex {vertex} outside 0..{num_vertices - 1}")


class SelfLoop(InvalidInstance):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class DuplicateEdge(InvalidInstance):
    def __init__(self, edge: tuple[int, int]):
        self.edge = edge
        super().__init__(f"edge {edge} listed more than once")


class InvalidColor(InvalidInstance):
    def __init__(self, edge: tuple[int, int], color: int):
        self.edge = edge
        self.color = color
        super().__init__(f"edge {edge} has negative color {color}")


class ParseError(InvalidInstance):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


# --- Precondition failures ---
class PreconditionError(TridomError, ValueError):
    """An algorithm was called on an instance outside the class it is guaranteed for."""


class PreconditionTriangle(PreconditionError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"cyclic triangle {witness[0]}->{witness[1]}->{witness[2]}->{witness[0]}")


class PreconditionBeta(PreconditionError):
    def __init__(self, beta: int, allowed: str, witness: tuple[int, ...]):
        self.beta = beta
        self.witness = witness
        super().__init__(f"beta={beta} violates {allowed}; transversal independent set {witness}")


class PreconditionAlpha(PreconditionError):
    def __init__(self, alpha: int, allowed: str, witness: tuple[int, ...]):
        self.alpha = alpha
        self.witness = witness
        super().__init__(f"alpha={alpha} violates {allowed}; independent set {witness}")


class NotBipartite(PreconditionError):
    def __init__(self, num_classes: int):
        self.num_classes = num_classes
        super().__init__(f"expected exactly 2 classes, got {num_classes}")


class NotAcyclic(PreconditionError):
    def __init__(self, cycle: list[tuple[int, int]]):
        self.cycle = cycle
        super().__init__(f"directed cycle {cycle}")


class NotAClique(PreconditionError):
    def __init__(self, clique_index: int, pair: tuple[int, int]):
        self.clique_index = clique_index
        self.pair = pair
        super().__init__(f"cover element {clique_index} is not a clique: {pair} nonadjacent")


class NotACover(PreconditionError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} lies in no cover element")


class NotGallai(PreconditionError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"rainbow triangle {witness}")


class ColorClash(PreconditionError):
    def __init__(self, edge: tuple[int, int], color: int, allowed: tuple[int, int]):
        self.edge = edge
        self.color = color
        self.allowed = allowed
        super().__init__(f"edge {edge} has color {color}, expected one of {allowed}")


# --- Resource and consistency failures ---
class BudgetExceeded(TridomError):
    def __init__(self, what: str, size: int, budget: int):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: {size} exceeds budget {budget}")


class InternalContradiction(TridomError):
    """A step the proofs guarantee did not hold; the input or the code is broken."""


class RetryBudgetExceeded(TridomError):
    def __init__(self, retries: int):
        self.retries = retries
        super().__init__(f"triangle repair gave up after {retries} flips")


class TargetUnreachable(TridomError):
    def __init__(self, graph, target_alpha: int, achieved_alpha: int):
        self.graph = graph
        self.target_alpha = target_alpha
        self.achieved_alpha = achieved_alpha
        super().__init__(f"target alpha {target_alpha} not reached (achieved {achieved_alpha})")


class ClassOutOfRange(InvalidInstance):
    def __init__(self, class_index: int, num_classes: int):
        self.class_index = class_index
        self.num_classes = num_classes
        super().__init__(f"class {class_index} outside 0..{num_classes - 1}")
