"""Survey a small exhaustive corpus: values, bounds and checks per graph.

Run with: python demos/corpus_survey.py
"""

from boxicity.cli import SURVEY_HEADER, survey_row
from boxicity.corpus import all_graphs

print("one representative per isomorphism class, 1 to 4 vertices")
print()
print(SURVEY_HEADER)
failures = 0
for n in range(1, 5):
    for g in all_graphs(n):
        row = survey_row(g)
        print(row.to_csv())
        if not row.all_pass():
            failures += 1

print()
if failures:
    print(f"{failures} graphs failed a check; that would mean a bug")
else:
    print("every graph passes the Mycielski bound checks, the")
    print("boxicity-chromatic inequality and the chromatic step")
