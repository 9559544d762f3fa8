"""Exception types shared across the package.

Three broad groups: structural problems found while building a lattice,
precondition violations on queries, and contract violations that indicate
either corrupt input or a counterexample to a property the code relies on.
The command line tool maps these onto its exit codes.
"""


class ShellboundError(Exception):
    """Base class for every error raised by this package."""


class LatticeBuildError(ShellboundError):
    """A face lattice could not be constructed from the given data."""


class NotGraded(LatticeBuildError):
    """A cover pair skips a rank, or an element has no chain down to the bottom."""


class NoBottom(LatticeBuildError):
    """The rank-0 minimum is missing or not unique."""


class NoTop(LatticeBuildError):
    """The maximal element is missing or not unique."""


class CyclicCovers(LatticeBuildError):
    """The cover relation contains a directed cycle."""


class InputError(ShellboundError):
    """A precondition on an operation's input was violated."""


class EmptyInput(InputError):
    """No facets were supplied."""


class MixedDimensions(InputError):
    """Facet sets of differing cardinality were supplied to a pure builder."""


class InvalidFace(InputError):
    """A face id does not name a face usable by this operation."""


class RankOutOfRange(InputError):
    """A requested rank falls outside the lattice's rank interval."""


class IndexOutOfRange(InputError):
    """A facet position falls outside the order being examined."""


class RangeError(InputError):
    """A numeric parameter falls outside its admissible range."""


class PreconditionViolated(InputError):
    """A stated hypothesis of the operation does not hold for the input."""


class InvalidSplit(InputError):
    """A split position is not admissible for the given shelling order."""


class NotDiamond(InputError):
    """The operation is only defined on diamond (thin) lattices."""


class NotPseudomanifold(InputError):
    """The operation needs a pure complex whose ridges lie in at most two facets."""


class NotSimplicial(InputError):
    """The operation is only defined on simplicial complexes."""


class NotShellable(InputError):
    """A hypothesis demanded a shelling and the search proved none exists."""


class HypothesisNotMet(InputError):
    """A comparison's facet-count hypothesis fails, so the claim is silent."""


class NoSuchAtom(ShellboundError):
    """No atom avoids the given coatom; the input violates the diamond property."""


class NotAShelling(ShellboundError):
    """An order presented as a verified shelling failed verification.

    Carries the step-level failure so callers can report it.
    """

    def __init__(self, failure):
        self.failure = failure
        super().__init__(f"order rejected at step {failure.step}: {failure.reason}")


class BudgetExceeded(ShellboundError):
    """The backtracking search hit its node budget before reaching an answer.

    Distinguished from a negative result: nothing is known about the input.
    """


class InternalContradiction(ShellboundError):
    """A property guaranteed by the verified input failed to hold.

    Either the input lied about a precondition or this is a genuine
    counterexample; both deserve a loud stop rather than a silent answer.
    """
