"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: input-side errors (instance validation,
malformed JSON) exit 2, internal invariant breaches (AssemblyNotSimple,
PlacementFailed, NoHit) exit 3. Rejections that are legitimate NO verdicts
(EmptyVisibility, NoMinimalPoint) are caught by the solver and turned into
witnesses, never surfaced to the CLI as exceptions.
"""


class BendExtError(Exception):
    """Base class for every error raised by this package."""


class GeometryError(BendExtError):
    """Base class for geometric precondition violations."""


class NotSimplePolygon(GeometryError):
    """Ring is degenerate, self-intersecting, or not counterclockwise."""


class PathNotInside(GeometryError):
    """A splitting path leaves the polygon it is supposed to cut."""


class PathSelfIntersects(GeometryError):
    """A splitting path crosses itself."""


class PointOutside(GeometryError):
    """Viewpoint for a visibility query is outside the polygon closure."""


class EmptyVisibility(GeometryError):
    """Both-endpoint visibility region has empty interior; instance is a NO."""


class NoMinimalPoint(GeometryError):
    """No candidate bend point has an obstructed region contained in all
    others; instance is a NO."""


class EmptyRefinement(GeometryError):
    """A refinement step left no room for the remaining graph; instance is a
    NO."""


class DegeneratePinch(GeometryError):
    """Refinement assembly pinched into pieces none of which carries every
    remaining graph vertex; instance is rejected (degenerate input)."""


class InternalInvariantError(BendExtError):
    """A condition the algorithm guarantees failed to hold; always a bug."""


class AssemblyNotSimple(InternalInvariantError):
    """A refinement step produced a non-simple polygon."""


class PlacementFailed(InternalInvariantError):
    """Top-down bend placement exhausted its shrink schedule."""


class NoHit(InternalInvariantError):
    """Rotating-ray search swept past the pivot wedge without touching the
    target region."""


class InstanceError(BendExtError):
    """Base class for input validation failures (CLI exit 2)."""


class TooManyOuterBends(InstanceError):
    """More than one non-vertex corner between consecutive graph vertices."""


class CrossingChords(InstanceError):
    """Two chords interleave in the cyclic vertex order."""


class DuplicateChord(InstanceError):
    """The same chord appears twice."""


class ChordIsOuterEdge(InstanceError):
    """A chord joins consecutive graph vertices."""


class RootNotDegreeOne(InstanceError):
    """Requested dual-tree root is not a leaf of the tree."""


class DrawingError(InstanceError):
    """Malformed drawing payload (bad verdict, path length, or point)."""


class InfeasibleSpec(InstanceError):
    """Generator request violates m <= n - 3."""


class ResolutionTooLarge(BendExtError):
    """Grid oracle exceeded its node-expansion budget."""
