"""H^3(GL_6(F_2); F_2) is nonzero, from the shipped ledger of published dimensions."""

from glcohom.webb import ledger_resolver, paper_ledger, paper_ledger_path, parity_sum, report_render

print("ledger:", paper_ledger_path())
ledger = paper_ledger()
for entry in ledger:
    print(" ", entry.format_line())

report = parity_sum(6, 3, ledger_resolver(ledger, 3))
print()
print(report_render(report))
print("certified:", report.certified)
