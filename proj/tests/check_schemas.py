"""Runs the multiplane tool and validates every JSON document against its schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    tool, schema_dir, work = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.v1.json")}
    failures = 0

    def run(args, schema, expect_code=0):
        nonlocal failures
        proc = subprocess.run([tool, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expect_code:
            print(f"FAIL {label}: exit {proc.returncode}, wanted {expect_code}\n{proc.stderr}")
            failures += 1
            return None
        if schema is None:
            print(f"ok   {label} (exit {proc.returncode})")
            return proc.stdout
        try:
            doc = json.loads(proc.stdout)
            jsonschema.validate(doc, schemas[schema])
        except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
            print(f"FAIL {label}: {exc}")
            failures += 1
            return None
        print(f"ok   {label} -> {schema}")
        return proc.stdout

    run(["invariants", "--x", "2", "--y", "3"], "invariants")
    run(["params", "--e", "10"], "params")
    run(["cremona", "--m", "4", "--e", "6", "--eprime", "9", "--d-max", "40"], "cremona")
    run(["net", "--m", "3", "--h", "1", "--ell", "3", "--seed", "2"], "net")
    cover = run(["construct", "--x", "2", "--y", "3", "--seed", "4"], "cover")
    if cover is not None:
        path = work / "schema_cover.json"
        path.write_text(cover)
        out = run(["verify", str(path)], "verify")
        if out is not None and json.loads(out).get("matches_stored") is not True:
            print("FAIL verify: stored report does not match")
            failures += 1
        doc = json.loads(cover)
        for key in ("requested_seed", "attempts", "report"):
            doc.pop(key)
        bare = work / "schema_cover_bare.json"
        bare.write_text(json.dumps(doc))
        run(["verify", str(bare)], "report")

    run(["invariants", "--x", "2", "--y", "1"], None, expect_code=2)
    run(["cremona", "--m", "3", "--e", "4"], None, expect_code=2)
    garbage = work / "schema_garbage.json"
    garbage.write_text("{not json")
    run(["verify", str(garbage)], None, expect_code=2)

    print("schema checks " + ("passed" if failures == 0 else f"failed: {failures}"))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
