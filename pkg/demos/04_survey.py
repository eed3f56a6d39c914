"""
Sweeping small cubic graphs
===========================

Colour every connected cubic signed graph up to 8 vertices (one per
signature orbit) and tabulate the exact chromatic numbers.
"""

from signedhom.harness import SurveyOptions, cubic_instances, enumerate_cubic_graphs, run_survey

for n in (4, 6, 8):
    print(n, "vertices:", len(enumerate_cubic_graphs(n)), "topologies,",
          len(cubic_instances(n)), "signature orbits")

summary, reports = run_survey(SurveyOptions(max_n=8, sp9star=True, timings=False))
print("instances:", summary.instances, "falsifications:", summary.falsifications)
print("chi histogram:", summary.chi_histogram)
print("weighted:", summary.weighted_chi_histogram)
print("max chi", summary.max_chi, "for", summary.max_chi_witness)
print("branches:", summary.branches)
