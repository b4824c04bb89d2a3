"""Exact algebra kernel for U_q(osp(1|2)) at generic q and at roots of unity."""

__version__ = "0.1.0"
