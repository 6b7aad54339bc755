"""
Build HTML Validation Report
"""
import sys
import json
import datetime
import platform
from pathlib import Path
from jinja2 import Template
import markdown

# Add parent to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import Paths

SUITES = ("golden", "crosscheck", "even_type", "inertia_oracle")

STYLE = """
        body { font-family: 'Segoe UI', Tahoma, Geneva, Verdana, sans-serif;
               max-width: 1200px; margin: 40px auto; padding: 20px; background: #f5f5f5; }
        table { border-collapse: collapse; width: 100%; margin: 20px 0; background: white;
                box-shadow: 0 2px 4px rgba(0,0,0,0.1); }
        th, td { border: 1px solid #ddd; padding: 8px 12px; text-align: left; }
        th { background-color: #2c3e50; color: white; }
        tr:nth-child(even) { background-color: #f9f9f9; }
        h1 { color: #2c3e50; border-bottom: 3px solid #3498db; padding-bottom: 10px; }
        h2 { color: #34495e; border-bottom: 2px solid #95a5a6; padding-bottom: 8px; margin-top: 40px; }
        pre { background: #2c3e50; color: #ecf0f1; padding: 15px; border-radius: 5px; overflow-x: auto; }
        code { font-family: 'Courier New', monospace; }
"""


def load_json(path):
    """Load JSON file"""
    with open(path) as f:
        return json.load(f)


def build_report(output_html):
    """
    Render the suite results in outputs/results into one HTML report

    The intermediate Markdown is written next to the HTML file.

    Parameters
    ----------
    output_html : str
        Output HTML file path

    Returns
    -------
    bool
        False if a suite result file is missing
    """
    results_dir = Path(Paths.results)

    print("="*70)
    print("BUILDING VALIDATION REPORT")
    print("="*70)
    print()

    print("Loading validation results...")
    suites = {}
    try:
        for name in SUITES:
            suites[name] = load_json(results_dir / f"{name}.json")
    except FileNotFoundError as e:
        print(f"ERROR: Missing validation result: {e}")
        print("Run validations first: ./run.sh full")
        return False

    all_passed = all(s.get("passed", False) for s in suites.values())

    template_path = Path(__file__).parent / "templates/report.tpl.md"
    print(f"Loading template: {template_path}")
    template = Template(template_path.read_text())

    print("Rendering report...")
    md_content = template.render(
        date=datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC"),
        env=f"{platform.system()} {platform.release()} / Python {platform.python_version()}",
        suites=suites,
        golden=suites["golden"],
        all_passed=all_passed,
        runtime=sum(s.get("elapsed_s", 0.0) for s in suites.values()),
    )

    html_content = markdown.markdown(md_content, extensions=["tables", "fenced_code"])
    html_styled = f"""<!DOCTYPE html>
<html>
<head>
    <meta charset="UTF-8">
    <title>CurveSig Validation Report</title>
    <style>{STYLE}    </style>
</head>
<body>
{html_content}
</body>
</html>
"""

    outpath = Path(output_html)
    outpath.parent.mkdir(parents=True, exist_ok=True)
    outpath.write_text(html_styled)
    outpath.with_suffix(".md").write_text(md_content)
    print(f"✓ HTML report written to: {outpath}")

    print()
    print("="*70)
    print("REPORT SUMMARY")
    print("="*70)
    print(f"\nValidation gates: {'✅ ALL PASSED' if all_passed else '⚠️ ONE OR MORE FAILED'}")
    for name, suite in suites.items():
        print(f"  {name}: {'✅' if suite.get('passed') else '❌'} "
              f"({suite['checks']} checks, {len(suite['failures'])} failures, {suite['elapsed_s']:.1f}s)")
    print("="*70)

    return True


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Build validation report")
    parser.add_argument("--out", type=str, default=f"{Paths.reports}/validation_report.html",
                        help="Output HTML file")
    args = parser.parse_args()

    success = build_report(args.out)
    sys.exit(0 if success else 1)
