"""
Which counts are possible?
==========================

A number n can only be a count of subgroups of order p^a if it is 1 mod p,
and 1 or 1+p mod p^2 unless the subgroups are Sylow.  Search the shipped
corpus for groups realizing each candidate.
"""

from frobcount.corpus import default_corpus
from frobcount.verify import classify_number, scan_range

corpus = default_corpus()
print(len(corpus), "groups in the default corpus")

for v in scan_range(3, 46, corpus):
    wit = f"{v.witness[0]} (a={v.witness[1]})" if v.witness else "-"
    print(f"{v.n:4d}  {v.status.value:22s} {wit}")

# 46 passes both filters but no group has it; the search just finds nothing
v = classify_number(3, 46, corpus)
for note in v.notes:
    print("  *", note)

# filtered out without any search
print(classify_number(3, 12, corpus).status.value)
print(classify_number(5, 51, corpus).status.value)
