// Copyright 2026 The UniDim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled-in RST-DT and PDTB 3.0 mapping tables. Cells are kept exactly as
// printed; normalization happens in dimensions.cc.

#include "mapping_tables_data.h"

namespace unidim::internal {

// Class, End label, Nuc., N-S, Pol., Basic Op., Impl. order, SoC, Temp.,
// Add. features, followed by the RST-DT relation name of the end label.
const RawRstRow kRawRstRows[] = {
    {"Background", "Background", "Mono", "N-S", "pos/neg", "add", "N.A.", "obj", "anti/N.A.", "", "background"},
    {"Background", "Background", "Mono", "S-N", "pos/neg", "add", "N.A.", "obj", "chron/N.A.", "", "background"},
    {"Background", "Circumstance", "Mono", "", "pos/neg", "add", "N.A.", "obj", "syn/N.A.", "", "circumstance"},
    {"Cause", "Cause", "Mono", "N-S", "pos", "cau", "bas", "obj", "chron", "", "cause"},
    {"Cause", "Cause", "Mono", "S-N", "pos", "cau", "non-b", "obj", "anti", "", "cause"},
    {"Cause", "Cause-result", "Multi", "", "pos", "cau", "bas/non-b", "obj", "chron/anti", "", "cause-result"},
    {"Cause", "Result", "Mono", "N-S", "pos", "cau", "non-b", "obj", "anti", "", "result"},
    {"Cause", "Result", "Mono", "S-N", "pos", "cau", "bas", "obj", "chron", "", "result"},
    {"Cause", "Consequence-n", "Mono", "N-S", "pos", "cau", "non-b", "obj", "anti", "", "consequence-n"},
    {"Cause", "Consequence-n", "Mono", "S-N", "pos", "cau", "bas", "obj", "chron", "", "consequence-n"},
    {"Cause", "Consequence-s", "Mono", "N-S", "pos", "cau", "bas", "obj", "chron", "", "consequence-s"},
    {"Cause", "Consequence-s", "Mono", "S-N", "pos", "cau", "non-b", "obj", "anti", "", "consequence-s"},
    {"Cause", "Consequence", "Multi", "", "pos", "cau", "bas/non-b", "obj", "chron/anti", "", "consequence"},
    {"Comparison", "Comparison", "Both", "", "pos", "add", "N.A.", "obj/sub", "N.A.", "", "comparison"},
    {"Comparison", "Preference", "Mono", "", "neg", "add", "N.A.", "obj/sub", "N.A.", "", "preference"},
    {"Comparison", "Analogy", "Both", "", "pos", "add", "N.A.", "sub", "N.A.", "", "analogy"},
    {"Comparison", "Proportion", "Multi", "", "pos", "add/cau", "any", "obj/sub", "any", "", "proportion"},
    {"Conditional", "Condition", "Mono", "N-S", "pos/neg", "cau", "non-b", "obj/sub", "anti/N.A.", "conditional", "condition"},
    {"Conditional", "Condition", "Mono", "S-N", "pos/neg", "cau", "bas", "obj/sub", "chron/N.A.", "conditional", "condition"},
    {"Conditional", "Hypothetical", "Mono", "N-S", "pos", "cau", "non-b", "sub", "N.A.", "conditional", "hypothetical"},
    {"Conditional", "Hypothetical", "Mono", "S-N", "pos", "cau", "bas", "sub", "N.A.", "conditional", "hypothetical"},
    {"Conditional", "Contingency", "Mono", "N-S", "pos/neg", "cau", "non-b", "obj", "anti", "conditional", "contingency"},
    {"Conditional", "Contingency", "Mono", "S-N", "pos/neg", "cau", "bas", "obj", "chron", "conditional", "contingency"},
    {"Conditional", "Otherwise", "Mono", "N-S", "neg", "cau", "bas", "obj/sub", "chron/N.A.", "conditional", "otherwise"},
    {"Conditional", "Otherwise", "Multi", "", "neg", "cau", "bas", "obj/sub", "chron/N.A.", "conditional", "otherwise"},
    {"Contrast", "Contrast", "Multi", "", "neg", "add", "N.A.", "obj/sub", "any", "", "contrast"},
    {"Contrast", "Concession", "Mono", "N-S", "neg", "cau", "non-b", "obj/sub", "anti/N.A.", "", "concession"},
    {"Contrast", "Concession", "Mono", "S-N", "neg", "cau", "bas", "obj/sub", "chron/N.A.", "", "concession"},
    {"Contrast", "Antithesis", "Mono", "", "neg", "add/cau", "any", "obj/sub", "any", "", "antithesis"},
    {"Elaboration", "El.-additional", "Mono", "", "pos", "add", "N.A.", "obj/sub", "N.A.", "", "elaboration-additional"},
    {"Elaboration", "El.-gen.-spec.", "Mono", "", "pos", "add", "N.A.", "obj/sub", "N.A.", "specificity", "elaboration-general-specific"},
    {"Elaboration", "El.-part-whole", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "specificity", "elaboration-part-whole"},
    {"Elaboration", "El.-process-step", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "specificity", "elaboration-process-step"},
    {"Elaboration", "El.-object-attr.", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "specificity", "elaboration-object-attribute"},
    {"Elaboration", "El.-set-member", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "spec.-ex.", "elaboration-set-member"},
    {"Elaboration", "Example", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "spec.-ex.", "example"},
    {"Elaboration", "Definition", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "specificity", "definition"},
    {"Enablement", "Purpose", "Mono", "N-S", "pos", "cau", "bas", "obj/sub", "chron/N.A.", "goal", "purpose"},
    {"Enablement", "Purpose", "Mono", "S-N", "pos", "cau", "non-b", "obj/sub", "anti/N.A.", "goal", "purpose"},
    {"Enablement", "Enablement", "Mono", "N-S", "pos", "cau", "non-b", "obj/sub", "anti/N.A.", "goal", "enablement"},
    {"Enablement", "Enablement", "Mono", "S-N", "pos", "cau", "bas", "obj/sub", "chron/N.A.", "goal", "enablement"},
    {"Evaluation", "Evaluation", "Both", "", "pos", "add/cau", "any", "sub", "N.A.", "specificity", "evaluation"},
    {"Evaluation", "Interpretation", "Both", "", "pos", "add/cau", "any", "sub", "N.A.", "specificity", "interpretation"},
    {"Evaluation", "Conclusion", "Mono", "N-S", "pos", "cau", "bas", "sub", "N.A.", "specificity", "conclusion"},
    {"Evaluation", "Conclusion", "Mono", "S-N", "pos", "cau", "non-b", "sub", "N.A.", "specificity", "conclusion"},
    {"Evaluation", "Conclusion", "Multi", "", "pos", "cau", "bas/non-b", "sub", "N.A.", "specificity", "conclusion"},
    {"Evaluation", "Comment", "Mono", "", "pos", "add", "N.A.", "sub", "N.A.", "specificity", "comment"},
    {"Explanation", "Evidence", "Mono", "N-S", "pos", "cau", "non-b", "sub", "anti", "", "evidence"},
    {"Explanation", "Evidence", "Mono", "S-N", "pos", "cau", "bas", "sub", "chron", "", "evidence"},
    {"Explanation", "Exp.-argument.", "Mono", "N-S", "pos", "cau", "non-b", "obj", "anti", "", "explanation-argumentative"},
    {"Explanation", "Exp.-argument.", "Mono", "S-N", "pos", "cau", "bas", "obj", "chron", "", "explanation-argumentative"},
    {"Explanation", "Reason", "Mono", "N-S", "pos", "cau", "non-b", "obj", "anti", "", "reason"},
    {"Explanation", "Reason", "Mono", "S-N", "pos", "cau", "bas", "obj", "chron", "", "reason"},
    {"Explanation", "Reason", "Multi", "", "pos", "cau", "bas/non-b", "obj", "chron/anti", "", "reason"},
    {"Joint", "List", "Multi", "", "pos", "add", "N.A.", "obj/sub", "syn/chron/N.A.", "list", "list"},
    {"Joint", "Disjunction", "Multi", "", "pos/neg", "add", "N.A.", "obj/sub", "syn/N.A.", "alternative", "disjunction"},
    {"Summary", "Summary", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "specificity", "summary"},
    {"Summary", "Restatement", "Mono", "", "pos", "add", "N.A.", "obj", "N.A.", "spec.-equiv.", "restatement"},
    {"Temporal", "Temp.-before", "Mono", "N-S", "pos", "add", "N.A.", "obj", "chron", "", "temporal-before"},
    {"Temporal", "Temp.-before", "Mono", "S-N", "pos", "add", "N.A.", "obj", "anti", "", "temporal-before"},
    {"Temporal", "Temp.-after", "Mono", "N-S", "pos", "add", "N.A.", "obj", "anti", "", "temporal-after"},
    {"Temporal", "Temp.-after", "Mono", "S-N", "pos", "add", "N.A.", "obj", "chron", "", "temporal-after"},
    {"Temporal", "Temp.-same-time", "Both", "", "pos", "add", "N.A.", "obj", "syn", "", "temporal-same-time"},
    {"Temporal", "Sequence", "Multi", "", "pos", "add", "N.A.", "obj", "chron", "", "sequence"},
    {"Temporal", "Inverted-seq.", "Multi", "", "pos", "add", "N.A.", "obj", "anti", "", "inverted-sequence"},
    {"Manner-Means", "Means", "Mono", "N-S", "pos", "cau", "non-b", "obj", "anti", "", "means"},
    {"Manner-Means", "Means", "Mono", "S-N", "pos", "cau", "bas", "obj", "chron", "goal", "means"},
    {"Topic-Comment", "Problem-sol.-n", "Mono", "N-S", "pos", "cau", "non-b", "obj/sub", "anti/N.A.", "goal", "problem-solution-n"},
    {"Topic-Comment", "Problem-sol.-n", "Mono", "S-N", "pos", "cau", "bas", "obj/sub", "chron/N.A.", "goal", "problem-solution-n"},
    {"Topic-Comment", "Problem-sol.-s", "Mono", "N-S", "pos", "cau", "bas", "obj/sub", "chron/N.A.", "goal", "problem-solution-s"},
    {"Topic-Comment", "Problem-sol.-s", "Mono", "S-N", "pos", "cau", "non-b", "obj/sub", "anti/N.A.", "goal", "problem-solution-s"},
    {"Topic-Comment", "Problem-sol.", "Multi", "", "pos", "cau", "bas/non-b", "obj/sub", "achron/anti/N.A.", "goal", "problem-solution"},
};

// Class_type, End label, A1-A2, Pol., Basic Op., Impl. order, SoC, Temp.,
// Add. features. The printed table repeats the Cause/Result/A1-A2 row; it is
// stored once.
const RawPdtbRow kRawPdtbRows[] = {
    {"Synchronous", "", "", "pos", "add", "N.A.", "obj", "sync", ""},
    {"Asynchronous", "Precedence", "A1-A2", "pos", "add", "N.A.", "obj", "chron", ""},
    {"Asynchronous", "Precedence", "A2-A1", "pos", "add", "N.A.", "obj", "anti", ""},
    {"Asynchronous", "Succession", "A1-A2", "pos", "add", "N.A.", "obj", "anti", ""},
    {"Asynchronous", "Succession", "A2-A1", "pos", "add", "N.A.", "obj", "chron", ""},
    {"Cause", "Reason", "A1-A2", "pos", "cau", "non-b", "obj", "anti", ""},
    {"Cause", "Reason", "A2-A1", "pos", "cau", "bas", "obj", "chron", ""},
    {"Cause", "Result", "A1-A2", "pos", "cau", "bas", "obj", "chron", "goal"},
    {"Cause", "NegResult", "", "neg", "cau", "bas", "obj", "chron", ""},
    {"Cause+Belief", "Reason+Belief", "A1-A2", "pos", "cau", "non-b", "sub", "NS", ""},
    {"Cause+Belief", "Reason+Belief", "A2-A1", "pos", "cau", "bas", "sub", "NS", ""},
    {"Cause+Belief", "Result+Belief", "A1-A2", "pos", "cau", "bas", "sub", "NS", ""},
    {"Cause+Belief", "Result+Belief", "A2-A1", "pos", "cau", "non-b", "sub", "NS", ""},
    {"Cause+SpeechAct", "Reason+SpeechAct", "A1-A2", "pos", "cau", "non-b", "sub", "NS", ""},
    {"Cause+SpeechAct", "Reason+SpeechAct", "A2-A1", "pos", "cau", "bas", "sub", "NS", ""},
    {"Cause+SpeechAct", "Result+SpeechAct", "A1-A2", "pos", "cau", "bas", "sub", "NS", ""},
    {"Cause+SpeechAct", "Result+SpeechAct", "A2-A1", "pos", "cau", "non-b", "sub", "NS", ""},
    {"Purpose", "arg1-as-goal", "A1-A2", "pos", "cau", "non-b", "obj/sub", "NS", "goal"},
    {"Purpose", "arg1-as-goal", "A2-A1", "pos", "cau", "bas", "obj/sub", "NS", "goal"},
    {"Purpose", "arg2-as-goal", "A1-A2", "pos", "cau", "bas", "sub", "NS", "goal"},
    {"Condition", "arg1-as-cond", "A1-A2", "pos", "cau", "bas", "obj/sub", "NS", "conditional"},
    {"Condition", "arg1-as-cond", "A2-A1", "pos", "cau", "non-b", "obj/sub", "NS", "conditional"},
    {"Condition", "arg2-as-cond", "A1-A2", "pos", "cau", "non-b", "obj/sub", "NS", "conditional"},
    {"Condition", "arg2-as-cond", "A2-A1", "pos", "cau", "bas", "obj/sub", "NS", "conditional"},
    {"Condition+SpeechAct", "", "", "pos", "cau", "bas", "sub", "NS", "conditional"},
    {"Negative-Condition", "arg1-as-negcond", "A1-A2", "neg", "cau", "bas", "sub", "NS", "conditional"},
    {"Negative-Condition", "arg1-as-negcond", "A2-A1", "neg", "cau", "non-b", "sub", "NS", "conditional"},
    {"Negative-Condition", "arg2-as-negcond", "A1-A2", "neg", "cau", "non-b", "sub", "NS", "conditional"},
    {"Negative-Condition", "arg2-as-negcond", "A2-A1", "neg", "cau", "bas", "sub", "NS", "conditional"},
    {"Negative-Condition+SpeechAct", "", "", "neg", "cau", "bas", "sub", "NS", "conditional"},
    {"Concession", "arg1-as-denier", "A1-A2", "neg", "cau", "non-b", "obj/sub", "NS", ""},
    {"Concession", "arg1-as-denier", "A2-A1", "neg", "cau", "bas", "obj/sub", "NS", ""},
    {"Concession", "arg2-as-denier", "A1-A2", "neg", "cau", "bas", "obj/sub", "NS", ""},
    {"Concession", "arg2-as-denier", "A2-A1", "neg", "cau", "non-b", "obj/sub", "NS", ""},
    {"Concession+SpeechAct", "", "", "neg", "cau", "bas", "sub", "NS", ""},
    {"Contrast", "", "", "neg", "add", "NA", "obj", "NS", ""},
    {"Similarity", "", "", "pos", "add", "NA", "obj", "NS", ""},
    {"Conjunction", "", "", "pos", "add", "NA", "obj/sub", "NS", ""},
    {"Disjunction", "", "", "neg", "add", "NA", "obj/sub", "NS", "alternative"},
    {"Equivalence", "", "", "pos", "add", "NA", "obj/sub", "NS", ""},
    {"Exception", "arg1-as-excpt", "", "neg", "add", "NA", "obj/sub", "NS", ""},
    {"Exception", "arg2-as-excpt", "", "neg", "add", "NA", "obj/sub", "NS", ""},
    {"Instantiation", "arg1-as-instance", "", "pos", "add", "NA", "obj/sub", "NS", "specificity"},
    {"Instantiation", "arg2-as-instance", "", "pos", "add", "NA", "obj/sub", "NS", "specificity"},
    {"Level-of-detail", "arg1-as-detail", "", "pos", "add", "NA", "obj/sub", "NS", "specificity"},
    {"Level-of-detail", "arg2-as-detail", "", "pos", "add", "NA", "obj/sub", "NS", "specificity"},
    {"Manner", "arg1-as-manner", "A1-A2", "pos", "add", "NA", "obj/sub", "NS", "specificity"},
    {"Manner", "arg2-as-manner", "", "pos", "add", "NA", "obj/sub", "NS", "specificity"},
    {"Substitution", "arg1-as-subst", "A1-A2", "neg", "cau", "bas", "obj/sub", "NS", ""},
    {"Substitution", "arg1-as-subst", "A2-A1", "neg", "cau", "non-b", "obj/sub", "NS", ""},
    {"Substitution", "arg2-as-subst", "A1-A2", "neg", "cau", "non-b", "obj/sub", "NS", ""},
    {"Substitution", "arg2-as-subst", "A2-A1", "neg", "cau", "bas", "obj/sub", "NS", ""},
};

const std::size_t kRawRstRowCount = sizeof(kRawRstRows) / sizeof(kRawRstRows[0]);
const std::size_t kRawPdtbRowCount =
    sizeof(kRawPdtbRows) / sizeof(kRawPdtbRows[0]);

}  // namespace unidim::internal
