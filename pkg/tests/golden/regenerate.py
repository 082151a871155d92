"""Rewrite the golden CLI outputs.  Review the diff before committing."""
import json
import sys
from pathlib import Path

from logcorners.cli.main import run

CASES = {
    "integrate_dlog": ["integrate", "--chart", "I(0,a)", "--form", "dlog(r)", "--scale0", "lam"],
    "integrate_log_dr": ["integrate", "--chart", "I(0,a)", "--form", "log(r)*r*dlog(r)", "--scale0", "lam"],
    "integrate_square": ["integrate", "--chart", "I(0,a) x I(0,b)", "--form", "log(r)*dlog(r) ^wedge dlog(s)",
                         "--scale0", "r=lam,s=mu"],
    "integrate_annulus": ["integrate", "--chart", "I(0,1) x S1", "--form", "r*dlog(r) ^wedge dth",
                          "--approx", ""],
    "integrate_chart_scale": ["integrate", "--chart", "I(0,1) x [0)", "--form", "log(t)*dlog(r)",
                              "--scale0", "lam", "--chart-scale", "c d/dt"],
    "reglim_log": ["reglim", "--expr", "log(r)", "--at", "1*d/dr@0"],
    "reglim_scaled": ["reglim", "--expr", "log(r)^2 + exp(r)", "--at", "lam*d/dr@0", "--approx", "lam=2"],
    "reglim_interior": ["reglim", "--chart", "I(0,1) x S1", "--expr", "r*exp(i*th)", "--at", "r=2, th=pi/2"],
    "restrict_corner": ["restrict", "--chart", "I(0,1) x I(0,1)", "--form", "log(r)*log(s)*dlog(s)",
                        "--face", "r,s"],
    "scale_phantom": ["scale", "--chart", "I(0,1) x [0)", "--form", "log(t)*dlog(t)", "--scale", "exp(r)*r d/dt"],
    "pullback_square": ["pullback", "--source", "u:I(0,b)", "--target", "I(0,a)", "--map", "r=u^2",
                        "--form", "log(r)^2*dlog(r)"],
    "pullback_angle": ["pullback", "--source", "S1", "--target", "ph:S1", "--map", "ph=-th+pi/2",
                       "--form", "exp(i*ph)*d(ph)"],
    "stokes_square": ["stokes-check", "--chart", "I(0,a) x I(0,a)", "--form", "log(r)*log(s)*dlog(s)",
                      "--scale0", "lam"],
    "classify_divergent": ["classify", "--chart", "I(0,a)", "--form", "dlog(r)"],
    "classify_convergent": ["classify", "--chart", "I(0,a)", "--form", "log(r)*r*dlog(r)"],
    "quadrant_solved": ["classify", "--quadrant", "0,0", "--f1", "3", "--f2", "5"],
    "quadrant_unsolvable": ["classify", "--quadrant", "1,1", "--f1", "2", "--f2", "3"],
    "quadrant_family": ["classify", "--quadrant", "1,1", "--f1", "2", "--f2", "1/2"],
    "homotopy_phantom": ["homotopy", "--chart", "[0) x I(0,1)", "--form", "log(t)*dlog(t) ^wedge dlog(r)",
                         "--kind", "phantom", "--coord", "t"],
    "homotopy_interval": ["homotopy", "--chart", "I(0,1)", "--form", "r*log(r)^2*r*dlog(r)",
                          "--kind", "interval", "--coord", "r"],
    "homotopy_combined": ["homotopy", "--chart", "I(0,1)", "--form", "log(r)*dlog(r)", "--kind", "combined",
                          "--coord", "r"],
    "period_residue": ["period", "residue", "--profile", "3*exp((exp(i*th)+exp(-i*th))/2)"],
    "period_kummer": ["period", "kummer", "--a", "a", "--lam", "lam"],
    "period_kummer_unit": ["period", "kummer", "--a", "a", "--lam", "1"],
    "period_i2": ["period", "i2", "--a", "a"],
    "period_double_copy": ["period", "double-copy", "--a", "a"],
    "error_type": ["integrate", "--chart", "I(0,a)", "--form", "log(r + 1)"],
    "error_parse": ["integrate", "--chart", "I(0,a)", "--form", "log(r"],
    "error_domain": ["homotopy", "--chart", "I(0,1)", "--form", "dlog(r)", "--kind", "interval", "--coord", "r"],
    "error_unbounded": ["integrate", "--chart", "[0,inf)", "--form", "r*dlog(r)"],
}

def main():
    here = Path(__file__).parent
    for name, args in CASES.items():
        code, doc = run(args)
        (here / f"{name}.json").write_text(json.dumps({"args": args, "exit": code, "output": doc},
                                                      indent=2, ensure_ascii=False) + "\n")
        print(name, code, json.dumps(doc, ensure_ascii=False), file=sys.stderr)


if __name__ == "__main__":
    main()
