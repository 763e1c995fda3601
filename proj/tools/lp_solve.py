#!/usr/bin/env python3
"""Solve CPLEX-LP files with HiGHS and print one line per file:

    <path> optimal <objective>
    <path> infeasible

Exit status 3 when highspy is not importable.
"""
import sys

try:
    import highspy
except ImportError:
    sys.stderr.write("highspy not available\n")
    sys.exit(3)


def solve(path):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    status = h.readModel(path)
    if status == highspy.HighsStatus.kError:
        return "error"
    h.run()
    model_status = h.getModelStatus()
    if model_status == highspy.HighsModelStatus.kOptimal:
        return "optimal %.17g" % h.getInfo().objective_function_value
    if model_status == highspy.HighsModelStatus.kInfeasible:
        return "infeasible"
    return "status-" + h.modelStatusToString(model_status).replace(" ", "_")


def main(argv):
    for path in argv[1:]:
        print(path, solve(path))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
