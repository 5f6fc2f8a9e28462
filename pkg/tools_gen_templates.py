"""One-off generator for src/tempnli/data/templates.tsv (run, then discard)."""

SF = "S[nm,base,f]"
ST = "S[nm,base,t]"


def npf(case):
    return f"NP[{case},nm,f]"


INTRANS_NP = (
    "λQ C1 C2 C3 K i1 j1.Q(λI.I,λx.∃e1.(K(λe2 i2 j2.({pred}(e2) ∧ during(time(e2),j2)"
    " ∧ after(j2,i2)),e1,i1,j1) ∧ C1(x,e1,Nom)))"
)
INTRANS_P = INTRANS_NP.replace("after(j2,i2)", "before(j2,i2)")
TRANS_NP = (
    "λP Q C1 C2 C3 K i1 j1.Q(λI.I,λx.P(λI.I,λy.∃e1.(K(λe2 i2 j2.({pred}(e2)"
    " ∧ during(time(e2),j2) ∧ after(j2,i2)),e1,i1,j1) ∧ C1(x,e1,Nom) ∧ C2(y,e1,Acc))))"
)
TRANS_P = TRANS_NP.replace("after(j2,i2)", "before(j2,i2)")
STATIVE_NP = (
    "λQ C1 C2 C3 K i1 j1.Q(λI.I,λx.∃e1.(K(λe2 i2 j2.({pred}(e2) ∧ during(j2,time(e2))"
    " ∧ ¬before(j2,i2)),e1,i1,j1) ∧ C1(x,e1,Nom)))"
)
STATIVE_P = STATIVE_NP.replace("¬before(j2,i2)", "before(j2,i2)")
STATIVE_LOC_NP = (
    "λP Q C1 C2 C3 K i1 j1.Q(λI.I,λx.P(λI.I,λy.∃e1.(K(λe2 i2 j2.({pred}(e2)"
    " ∧ during(j2,time(e2)) ∧ ¬before(j2,i2)),e1,i1,j1) ∧ C1(x,e1,Nom) ∧ C3(y,e1,Loc))))"
)
STATIVE_LOC_P = STATIVE_LOC_NP.replace("¬before(j2,i2)", "before(j2,i2)")
BARE_S_P = (
    "λC1 C2 C3 K i1 j1.∃e1.K(λe2 i2 j2.({pred}(e2) ∧ during(time(e2),j2)"
    " ∧ before(j2,i2)),e1,i1,j1)"
)
MAE = (
    "λM S C1 C2 C3 K i1 j1.S(C1,C2,C3,λJ e1 i2 j2.K(λe2 i3 j3.(J(e2,i3,j3)"
    " ∧ ∃t.M(λx4 e4 r4.(r4(e4) = x4),λx4 e4 r4.(r4(e4) = x4),λx4 e4 r4.(r4(e4) = x4),"
    "λJ4 e4 i4 j4.J4(e4,i4,j4),j3,t)),e1,i2,j2),i1,j1)"
)
IZEN = (
    "λQ S C1 C2 C3 K i1 j1.S(C1,C2,C3,λJ e1 i2 j2.K(λe2 i3 j3.(J(e2,i3,j3)"
    " ∧ Q(λI.I,λx.{cond})),e1,i2,j2),i1,j1)"
)
SS_TIME = (
    "λS C1 C2 C3 K i1 j1.S(C1,C2,C3,λJ e1 i2 j2.K(λe2 i3 j3.(J(e2,i3,j3)"
    " ∧ ∃x.({stamp} ∧ (x = j3))),e1,i2,j2),i1,j1)"
)
NP_TIME = "λN F.∃x.(N(λy.{stamp},x) ∧ F(x))"
NT_STAMP = "((normalized_time(x) = _code_) ∧ (gran(x) = _gran_))"
NT_STAMP_Y = "((normalized_time(y) = _code_) ∧ (gran(y) = _gran_))"
DOW_STAMP = "(day_of_week(x) = _dow_)"
DOW_STAMP_Y = "(day_of_week(y) = _dow_)"
ENTITY = "λN F.(N(λx.⊤,_word_) ∧ F(_word_))"
COPULA = "λQ C1 C2 C3 K i1 j1.Q(λI.I,λx.during(i1,x))"
COPULA_P = "λQ C1 C2 C3 K i1 j1.Q(λI.I,λx.(during(j1,x) ∧ before(j1,i1)))"
DITRANS_P = (
    "λO N Q C1 C2 C3 K i1 j1.Q(λI.I,λx.N(λI.I,λz.O(λI.I,λy.∃e1.(K(λe2 i2 j2.(_word_(e2)"
    " ∧ during(time(e2),j2) ∧ before(j2,i2)),e1,i1,j1) ∧ C1(x,e1,Nom) ∧ C2(y,e1,Acc)"
    " ∧ C3(z,e1,Dat)))))"
)
FRAME_NI_P = (
    "λQ C1 C2 C3 K i1 j1.Q(λI.I,λy.∃e1.(K(λe2 i2 j2.(_word_(e2) ∧ during(time(e2),j2)"
    " ∧ before(j2,i2)),e1,i1,j1) ∧ C3(y,e1,Dat)))"
)
FRAME_OTHER_P = FRAME_NI_P.replace("C3(y,e1,Dat)", "C2(y,e1,Acc)")
TRANS_FRAME_NI_P = TRANS_P.replace("C2(y,e1,Acc)", "C3(y,e1,Dat)").replace("{pred}", "_word_")
TRANS_FRAME_P = TRANS_P.replace("{pred}", "_word_")

rows = []

# ---------------------------------------------------------------- word keyed
words = []
for surface in ("が", "は", "を"):
    words.append((surface, "λQ.Q"))
for surface in ("に", "には", "、"):
    words.append((surface, "λV3.V3"))
words.append(("以前", IZEN.format(cond="before(j3,x)")))
words.append(("以降", IZEN.format(cond="after(j3,x)")))
words.append(("以来", IZEN.format(cond="(during(x,j3) ∧ during(i3,j3))")))
words.append(("前", MAE))
words.append(("後", MAE))
words.append(("である", COPULA))
words.append(("だった", COPULA_P))
words.append(("現在", "λV.V"))
words.append(("今", "λV.V"))
intrans = [("来る", "来た", "come"), ("行く", "行った", "go"), ("帰る", "帰った", "return"),
           ("泳ぐ", "泳いだ", "swim"), ("働く", "働いた", "work"), ("遊ぶ", "遊んだ", "play"),
           ("出発する", "出発した", "depart"), ("到着する", "到着した", "arrive"),
           ("開店する", "開店した", "open"), ("閉店する", "閉店した", "close"),
           ("歌う", "歌った", "sing"), ("踊る", "踊った", "dance")]
for np_, p, pred in intrans:
    words.append((np_, INTRANS_NP.format(pred=pred)))
    words.append((p, INTRANS_P.format(pred=pred)))
trans = [("訪ねる", "訪ねた", "visit"), ("読む", "読んだ", "read"), ("書く", "書いた", "write"),
         ("食べる", "食べた", "eat"), ("買う", "買った", "buy")]
for np_, p, pred in trans:
    words.append((np_, TRANS_NP.format(pred=pred)))
    words.append((p, TRANS_P.format(pred=pred)))
words.append(("いる", STATIVE_NP.format(pred="be_present")))
words.append(("いた", STATIVE_P.format(pred="be_present")))
words.append(("いる:loc", STATIVE_LOC_NP.format(pred="be_located")))
words.append(("いた:loc", STATIVE_LOC_P.format(pred="be_located")))
words.append(("ある", STATIVE_NP.format(pred="exist")))
words.append(("あった", STATIVE_P.format(pred="exist")))
words.append(("ある:loc", STATIVE_LOC_NP.format(pred="be_located")))
words.append(("あった:loc", STATIVE_LOC_P.format(pred="be_located")))
words.append(("泳いだ:s", BARE_S_P.format(pred="swim")))
for key, term in words:
    rows.append(("word", key, term))
assert len(words) == 58, len(words)

# ------------------------------------------------------------ category keyed
CASES = ["nc", "ga", "o", "ni", "to", "de", "kara", "made", "e", "yori", "no", "mo", "wa"]
cats = []
for c in CASES:                                   # entity defaults
    cats.append((npf(c), ENTITY))
cats.append(("NP", ENTITY))
for c in CASES[1:]:                               # case particles
    cats.append((f"{npf(c)}\\{npf('nc')}", "λQ.Q"))
cats.append(("NP\\NP", "λQ.Q"))
cats.append((f"{npf('nc')}:time", NP_TIME.format(stamp=NT_STAMP_Y)))
cats.append((f"{npf('nc')}:weekday", NP_TIME.format(stamp=DOW_STAMP_Y)))
cats.append(("NP:time", NP_TIME.format(stamp=NT_STAMP_Y)))
cats.append(("NP:weekday", NP_TIME.format(stamp=DOW_STAMP_Y)))
cats.append((f"({SF}/{SF}):time", SS_TIME.format(stamp=NT_STAMP)))
cats.append((f"({SF}/{SF}):weekday", SS_TIME.format(stamp=DOW_STAMP)))
cats.append(("(S/S):time", SS_TIME.format(stamp=NT_STAMP)))
cats.append(("(S/S):weekday", SS_TIME.format(stamp=DOW_STAMP)))
cats.append((f"{npf('nc')}/{npf('nc')}", "λQ.Q"))
cats.append((f"{npf('nc')}\\{npf('nc')}", "λQ.Q"))
cats.append((f"({npf('nc')}/{npf('nc')}):time", "λQ.Q"))
cats.append((f"({npf('nc')}\\{npf('nc')}):time", "λQ.Q"))
cats.append(("NP/NP", "λQ.Q"))
cats.append(("(NP/NP):time", "λQ.Q"))
for sf in (SF, ST):                               # modifier identities
    cats.append((f"{sf}/{sf}", "λV.V"))
cats.append(("S/S", "λV.V"))
for sf in (SF, ST):
    cats.append((f"({sf}/{sf})\\({sf}/{sf})", "λV3.V3"))
cats.append(("(S/S)\\(S/S)", "λV3.V3"))
for sf, nf in ((SF, npf("nc")), (ST, "NP[nc,nm,t]")):
    cats.append((f"({sf}/{sf})\\{nf}", "λQ V3.V3"))
cats.append(("(S/S)\\NP", "λQ V3.V3"))
for sf in (SF, ST):
    cats.append((f"({sf}/{sf})\\{sf}", MAE))
cats.append(("(S/S)\\S", MAE))
for sf in (SF, ST):                               # pro-drop sentence defaults
    cats.append((sf, BARE_S_P.format(pred="_word_")))
cats.append(("S", BARE_S_P.format(pred="_word_")))
cats.append((f"{SF}\\{npf('ga')}", INTRANS_P.format(pred="_word_")))
cats.append((f"{ST}\\NP[ga,nm,t]", INTRANS_P.format(pred="_word_")))
cats.append(("S\\NP", INTRANS_P.format(pred="_word_")))
cats.append((f"{SF}\\{npf('nc')}", COPULA))
cats.append((f"{ST}\\NP[nc,nm,t]", COPULA))
cats.append((f"({SF}\\{npf('ga')})\\{npf('o')}", TRANS_FRAME_P))
cats.append((f"({ST}\\NP[ga,nm,t])\\NP[o,nm,t]", TRANS_FRAME_P))
cats.append(("(S\\NP)\\NP", TRANS_FRAME_P))
cats.append((f"({SF}\\{npf('ga')})\\{npf('ni')}", TRANS_FRAME_NI_P))
cats.append((f"({ST}\\NP[ga,nm,t])\\NP[ni,nm,t]", TRANS_FRAME_NI_P))
cats.append((f"(({SF}\\{npf('ga')})\\{npf('ni')})\\{npf('o')}", DITRANS_P))
cats.append((f"(({ST}\\NP[ga,nm,t])\\NP[ni,nm,t])\\NP[o,nm,t]", DITRANS_P))
cats.append(("((S\\NP)\\NP)\\NP", DITRANS_P))
for sf in (SF, ST):
    cats.append((f"{sf}\\{sf}", "λV.V"))
cats.append(("S\\S", "λV.V"))
for c in CASES:
    if c in ("ga", "nc"):
        continue
    body = FRAME_NI_P if c == "ni" else FRAME_OTHER_P
    cats.append((f"{SF}\\{npf(c)}", body))
for c in CASES:
    if c in ("ga", "nc", "o", "ni"):
        continue
    cats.append((f"({SF}\\{npf('ga')})\\{npf(c)}", TRANS_FRAME_P))
for key, term in cats:
    rows.append(("category", key, term))
assert len(cats) == 92, len(cats)

with open("src/tempnli/data/templates.tsv", "w", encoding="utf-8") as f:
    f.write("# semantic templates: kind\tkey\tterm\n")
    for kind, key, term in rows:
        f.write(f"{kind}\t{key}\t{term}\n")
print(f"wrote {len(rows)} templates ({len(words)} word, {len(cats)} category)")
