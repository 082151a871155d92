"""Compare the cutoff heuristic with the exact regularized value.

Integrating over [eps, 1] and fitting a polynomial in log eps, the constant
term is the regularized integral at the unit basepoint.
"""
from logcorners.geometry import Chart, MonoidElement
from logcorners.integration import IntegrationDomain, integrate
from logcorners.logforms import LogForm, LogFunction
from logcorners.numeric import divergence_fit

I1 = Chart(basic=("r",), bounds={"r": MonoidElement.constant(1)})
dlog_r = LogForm.basis(I1, "r")
forms = {
    "dlog r": dlog_r,
    "log r dlog r": dlog_r * LogFunction.log(I1, "r"),
    "(1 + r) dlog r": dlog_r * (LogFunction.var(I1, "r") + 1),
}
for name, w in forms.items():
    fit = divergence_fit(w)
    exact = integrate(w, IntegrationDomain(I1, {"r": 1})).exact.evaluate()
    coeffs = ", ".join(f"{complex(c).real:+.8f}" for c in fit.coefficients)
    print(f"{name:<16} fit [{coeffs}]   exact constant {exact.real:+.8f}")
