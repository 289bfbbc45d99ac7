"""End-to-end checks of the fank command line: exit codes and key output lines."""
import pathlib
import subprocess
import sys
import tempfile

fank, root = sys.argv[1], pathlib.Path(sys.argv[2])
fans, plps = root / "data" / "fans", root / "data" / "plp"
failures = 0


def run(*args):
    return subprocess.run([fank, *map(str, args)], capture_output=True, text=True)


def expect(name, args, code, contains=(), absent=()):
    global failures
    r = run(*args)
    out = r.stdout + r.stderr
    bad = [c for c in contains if c not in out] + [f"unexpected {a}" for a in absent if a in out]
    if r.returncode != code or bad:
        failures += 1
        print(f"FAIL {name}: exit {r.returncode} (want {code}) missing {bad}\n{out}")
    else:
        print(f"ok   {name}")
    return r


expect("check pyramid", ["check", "pyramid"], 0,
       ["smooth: false", "complete: true", "simplicial: false", "polytopal: true",
        "C1 meet C2 = {R1,R2}: smooth", "C1 meet C3 = {R1,R4}: smooth",
        "C1 meet C4 = {R2,R3}: smooth", "C1 meet C5 = {R3,R4}: smooth"])
expect("check two-distant", ["check", fans / "two-distant.fan"], 0,
       ["smooth: false", "complete: true", "simplicial: false", "polytopal: false", "all singular cones distant: true"])
expect("check quadrant", ["check", fans / "quadrant.fan"], 0, ["smooth: true", "complete: false"])
expect("classify hirzebruch-1", ["classify", fans / "hirzebruch-1.fan"], 0,
       ["verdict: Isomorphic", "planar-span-index", "span index: 1"])
expect("classify fake-p2", ["classify", fans / "fake-p2.fan"], 1, ["verdict: NotIsomorphic", "K^1 rank: 2"])
expect("classify gt-flag3", ["classify", fans / "gt-flag3.fan"], 0,
       ["verdict: Isomorphic (distant-singular-cones)"])
expect("classify isolated-not-distant", ["classify", "isolated-not-distant"], 0, ["verdict: Unknown"])
expect("classify hirzebruch --r", ["classify", "hirzebruch-r", "--r", 3], 0, ["hirzebruch-3", "Isomorphic"])
expect("classify missing", ["classify", "no/such/file.fan"], 2, ["no such fan file"])
expect("examples listing", ["examples"], 0, ["hirzebruch-r", "p2", "wps-1-1-2", "fake-p2", "pyramid",
                                            "simplicial-distant", "two-distant", "isolated-not-distant", "gt-flag3"])
expect("examples gt-flag3", ["examples", "gt-flag3"], 0, ["ray r5 1 0 -1", "ray r6 0 -1 1", "cone s5 r2 r3 r5 r6"])
expect("examples unknown", ["examples", "nope"], 2, ["UnknownExample"])
expect("ideal contains", ["ideal", "contains", "-n", 2, "-g", "2,-1", "-g", "1,1", "a1 - a2"], 0, ["false"])
expect("ideal cofactors", ["ideal", "cofactors", "-n", 1, "-g", "1", "a1^2 - 1"], 0, ["-1 - a1"])
expect("ideal of a cone", ["ideal", "reduce", "--fan", "p2", "--cone", "{r1}", "a1 + a2"], 0, ["1 + a1"])
expect("ideal not a member", ["ideal", "cofactors", "-n", 1, "-g", "2", "a1 - 1"], 2, ["NotAMember"])
expect("plp verify constant", ["plp", "verify", plps / "simplicial-distant-constant.plp"], 0, ["valid"])
expect("plp verify bad", ["plp", "verify", plps / "p2-bad.plp"], 2, ["incompatible: s1 and s2"])
expect("plp preimage quadrant", ["plp", "preimage", plps / "quadrant-boundary.plp", "--cone", "s1"], 0,
       ["on s1:", "# check on {r1}: reduces to 0", "# check on {r2}: reduces to 0"])
expect("plp preimage refuses", ["plp", "preimage", plps / "pyramid-c1-boundary.plp", "--cone", "C1"], 2, ["NotInImage"])
expect("plp preimage split", ["plp", "preimage", plps / "hirzebruch-2-split.plp"], 0, ["first: on", "second: on"],
       ["FAILS"])
expect("plp preimage clump", ["plp", "preimage", plps / "fake-p2-open-clump.plp"], 0, ["on s1:", "on s2:"], ["FAILS"])
expect("plp extend singular", ["plp", "extend", plps / "simplicial-distant-constant.plp"], 2, ["NotSmooth"])

with tempfile.TemporaryDirectory() as tmp:
    out = pathlib.Path(tmp) / "ext.plp"
    fan_copy = pathlib.Path(tmp) / "hirzebruch-1.fan"
    fan_copy.write_text((fans / "hirzebruch-1.fan").read_text())
    src = pathlib.Path(tmp) / "one.plp"
    src.write_text("fan hirzebruch-1.fan\non s1: a1\n")
    expect("plp extend", ["plp", "extend", src, "-o", out], 0)
    expect("plp extend re-verify", ["plp", "verify", out], 0, ["valid: 4 maximal cones"])

    bad = pathlib.Path(tmp) / "bad.fan"
    bad.write_text("dim 2\nray r1 1 0\nray r2 0 1\ncone c1 r1 r1\n")
    expect("duplicate ray in cone", ["check", bad], 2, ["line 4", "duplicate ray r1"])
    bad.write_text("dim 2\nray r1 1 0\n")
    expect("no cones", ["check", bad], 2, ["no cones"])

# batch: deterministic, sorted by path
a = run("classify", "--batch", fans)
b = run("classify", "--batch", fans, "--jobs", 1)
heads = [l.split(":")[0] for l in a.stdout.splitlines() if ": dim " in l]
if a.stdout != b.stdout or heads != sorted(heads) or a.returncode != 1:
    failures += 1
    print(f"FAIL batch: exit {a.returncode}, order {heads}")
else:
    print(f"ok   batch ({len(heads)} fans)")

print(f"{failures} failures")
sys.exit(1 if failures else 0)
