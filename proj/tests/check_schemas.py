import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, data, schemas = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

resources = {}
for p in schemas.glob("*.schema.json"):
    resources[p.name] = Resource.from_contents(json.loads(p.read_text()))
registry = Registry().with_resources(resources.items())

failed = 0


def run(args, stdin=""):
    r = subprocess.run([cli, "--json", *args], input=stdin, capture_output=True, text=True)
    if r.returncode != 0:
        raise RuntimeError(f"{args}: exit {r.returncode}: {r.stderr}")
    return json.loads(r.stdout)


def check(schema, args, stdin=""):
    global failed
    doc = run(args, stdin)
    v = Draft202012Validator(resources[schema].contents, registry=registry)
    errs = list(v.iter_errors(doc))
    status = "ok" if not errs else "FAIL"
    print(f"{status:4} {schema:32} {' '.join(args)}")
    for e in errs:
        print("     ", e.message)
    failed += bool(errs)


d = lambda n: str(data / n)

check("check_result.schema.json", ["check", d("z4.tbl"), "--identity", "OS2"])
check("check_result.schema.json", ["check", d("nonosborn5.tbl"), "--identity", "OS2"])
check("property_report.schema.json", ["props", d("cc6.tbl")])
check("property_report.schema.json", ["props", d("moufang12.tbl")])
check("verification_report.schema.json", ["verify", d("cc6.tbl"), "--statement", "LEM_2_1_5"])
check("cycles.schema.json", ["cycles", d("cc6.tbl")])
check("crypto.schema.json", ["crypto", "encrypt", "--scheme", "cip", "--table", d("z26.tbl"), "--key", "3"], "7")
check("crypto.schema.json", ["crypto", "encrypt", "--scheme", "osborn", "--table", d("cc6.tbl"), "--key", "3",
                             "--stream"], "0 0 0 0")
check("isotopes.schema.json", ["isotopes", d("klein.tbl"), "--check", "WIP"])
check("isotopes.schema.json", ["isotopes", d("nonosborn5.tbl"), "--check", "OS2"])
check("find.schema.json", ["find", "--max", "8", "--want", "OS2&!LSIP"])
check("find.schema.json", ["find", "--max", "4", "--want", "!ASSOC"])
check("multgroup.schema.json", ["multgroup", d("moufang12.tbl")])

with tempfile.TemporaryDirectory() as tmp:
    out = pathlib.Path(tmp) / "c4"
    check("catalog_manifest.schema.json", ["enumerate", "--order", "4", "--out", str(out)])
    man = json.loads((out / "manifest.json").read_text())
    errs = list(Draft202012Validator(resources["catalog_manifest.schema.json"].contents).iter_errors(man))
    print(f"{'ok' if not errs else 'FAIL':4} {'catalog_manifest.schema.json':32} manifest.json")
    failed += bool(errs)
    check("verification_report.schema.json", ["verify", "--catalog", str(out), "--statement", "THM_1_3_2"])
    check("cycles.schema.json", ["cycles", "--catalog", str(out)])

sys.exit(1 if failed else 0)
