"""Regularized integrals on [0, a], the square and the annulus, with a Stokes check."""
from logcorners.cli.render import render_logform, render_scalar
from logcorners.geometry import Chart, MonoidElement
from logcorners.integration import IntegrationDomain, convergence_classify, integrate, stokes_check
from logcorners.logforms import LogForm, LogFunction

I_A = Chart(basic=("r",), bounds={"r": MonoidElement.constant("a")})
SQ = Chart(basic=("r", "s"), bounds={"r": MonoidElement.constant("a"), "s": MonoidElement.constant("b")})

log_r = LogFunction.log(I_A, "r")
dlog_r = LogForm.basis(I_A, "r")

# a convergent integral does not care about the basepoint
w = LogForm.dr(I_A, "r") * log_r
for lam in ("lam", 5):
    res = integrate(w, IntegrationDomain(I_A, {"r": lam}))
    print(f"int_0^a log r dr, basepoint {lam}: {render_scalar(res.exact)}")
print("classified:", convergence_classify(w, None).status)

# a divergent one does, through log lam
for k in (0, 1, 2):
    form = dlog_r * log_r ** k
    res = integrate(form, IntegrationDomain(I_A, {"r": "lam"}))
    print(f"int {render_logform(form)}: {render_scalar(res.exact)}")

# Stokes on the square for a 1-form with logarithmic growth at both edges
eta = LogForm.basis(SQ, "s") * LogFunction.log(SQ, "r") * LogFunction.var(SQ, "r")
rep = stokes_check(eta, IntegrationDomain(SQ, {"r": "lam", "s": "mu"}))
print("Stokes on [0,a]x[0,b]:", render_scalar(rep.lhs), "==", render_scalar(rep.rhs), rep.equal)
