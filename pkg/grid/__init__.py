from grid.domain import DIRECTIONS, CutArms, GridDomain, neighbour
from grid.field import GridField
from grid.geometry import Annulus, Disk, Shape, Square

__all__ = [
    "DIRECTIONS",
    "Annulus",
    "CutArms",
    "Disk",
    "GridDomain",
    "GridField",
    "neighbour",
    "Shape",
    "Square",
]
