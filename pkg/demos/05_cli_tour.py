"""Drive every CLI subcommand through a subprocess and show the exit codes.

The command line speaks canonical JSON: fixed key order, lowest-terms
rational strings, compact separators.  Identical invocations produce
byte-identical output, which this script demonstrates at the end.
"""

import subprocess
import sys

ELEMENT_P = '{"n":3,"sigma":[2,3,1],"scale":["2","3","1/6"]}'
ELEMENT_Q = '{"n":3,"sigma":[2,1,3],"scale":["1/2","2","1"]}'
MONOMIAL = '{"n":3,"rows":[["0","2","0"],["0","0","3"],["1/6","0","0"]]}'
LEAKY = '{"n":3,"rows":[["1","1/2","0"],["0","1","0"],["0","0","1"]]}'


def run(*args):
    result = subprocess.run(
        [sys.executable, "-m", "bmsym", *args], capture_output=True, text=True
    )
    shown = " ".join(a if len(a) < 30 else a[:27] + "..." for a in args)
    print(f"$ bmsym {shown}")
    if result.stdout:
        print(result.stdout, end="")
    if result.stderr:
        print("stderr:", result.stderr, end="")
    print(f"(exit {result.returncode})")
    print()
    return result


def main():
    run("compose", "--a", ELEMENT_P, "--b", ELEMENT_Q)
    run("inverse", "--input", ELEMENT_P)
    run("apply", "--input", ELEMENT_P, "--y", '["1","2","4"]')
    run("metric", "--y", "[1,2,4]")
    run("classify", "--matrix", MONOMIAL)
    run("classify", "--matrix", LEAKY)
    run("membership", "--matrix", MONOMIAL, "--sigma", "[3,1,2]")
    run("oracle", "--n", "3", "--trials", "10", "--seed", "0")
    run("lie-exp", "--input", '{"n":2,"tdiag":[0.5,-0.5]}')
    run("lie-log", "--input", '{"n":3,"diag":[2.0,0.5,1.0]}')
    run("lie-basis", "--n", "3")
    run("lie-structure", "--n", "3")
    run("components", "--input", '{"n":3,"diag":[-2.0,-0.5,1.0]}')

    first = run("oracle", "--n", "4", "--trials", "25", "--seed", "9")
    second = run("oracle", "--n", "4", "--trials", "25", "--seed", "9")
    print("two identical oracle runs are byte-identical:",
          first.stdout == second.stdout)


if __name__ == "__main__":
    main()
