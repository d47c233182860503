from .presentation import Band, Piercing, RibbonPresentation, connected_sum, trivial_presentation, unclasp, unclasp_all, wheel_presentation
from .group import GroupPresentation, alexander_matrix, fox_derivative, knot_group
from .laurent import LaurentPolynomial, TruncatedSeries, laurent_at_exp_h
from .alexander import DegenerateMatrixError, alexander_polynomial, alpha, alpha_coefficients, alexander_series, normalize_alexander, raw_alexander_determinant
