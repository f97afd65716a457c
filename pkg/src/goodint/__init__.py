"""Good integers and the average hull dimension of abelian codes."""

from .abelian import AbelianGroup, count_order_d, cyclotomic_classes
from .goodness import GoodClass, brute_force_classify, classify
from .hull import InnerProduct, avg_hull, avg_hull_bruteforce

__all__ = [
    "AbelianGroup",
    "GoodClass",
    "InnerProduct",
    "avg_hull",
    "avg_hull_bruteforce",
    "brute_force_classify",
    "classify",
    "count_order_d",
    "cyclotomic_classes",
]

__version__ = "0.1.0"
