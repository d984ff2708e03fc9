from satvec.experiments.categorization import CategorizationOptions, CategorizationReport, categorize
from satvec.experiments.report import ExperimentReport, ItemOutcome
from satvec.experiments.roundtrip import RoundtripOptions, roundtrip

CategorizationOptions = CategorizationOptions
CategorizationReport = CategorizationReport
ExperimentReport = ExperimentReport
ItemOutcome = ItemOutcome
RoundtripOptions = RoundtripOptions
categorize = categorize
roundtrip = roundtrip
