from .solution import FdSolution
