"""Regenerate the fixtures directory (ontologies, lexicons, manifest).

Run from the repository root:

    python3 tools/make_fixtures.py
"""

from __future__ import annotations

import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

# name -> (ontology text, lexicon rows, designated class, expected paragraph)
# Lexicon rows are (id, name, article, property_phrase) tuples; trailing empty
# cells are trimmed when written.
CASES = {}

CASES["appendix_01"] = (
    """Ontology(
  Declaration(Class(:LowerTrunkStructure))
  Declaration(Class(:PelvicStructure))
  Declaration(Class(:StructureOfSubregionOfTheTrunk))
  Declaration(Class(:PelvisAndLowerExtremities))
  Declaration(Class(:AbdomenAndThePelvis))

  SubClassOf(:PelvicStructure :LowerTrunkStructure)
  SubClassOf(:LowerTrunkStructure :StructureOfSubregionOfTheTrunk)
  SubClassOf(:PelvicStructure ObjectIntersectionOf(:PelvisAndLowerExtremities :AbdomenAndThePelvis :LowerTrunkStructure))
)
""",
    [
        (":LowerTrunkStructure", "lower trunk structure", "a", ""),
        (":PelvicStructure", "pelvic structure", "a", ""),
        (":StructureOfSubregionOfTheTrunk", "structure of subregion of the trunk", "", ""),
        (":PelvisAndLowerExtremities", "pelvis and lower extremities", "the", ""),
        (":AbdomenAndThePelvis", "abdomen and the pelvis", "the", ""),
    ],
    ":LowerTrunkStructure",
    "A lower trunk structure is a kind of structure of subregion of the trunk. "
    "A more specialised kind of lower trunk structure is pelvic structure. "
    "Another relevant aspect of lower trunk structure is that a pelvic structure "
    "is defined as the pelvis and lower extremities, the abdomen and the pelvis "
    "and a lower trunk structure.",
)

CASES["appendix_02"] = (
    """Ontology(
  Declaration(Class(:IntracranialProcedure))
  Declaration(Class(:ProcedureOnTheBrain))
  Declaration(Class(:ProcedureOnTheCentralNervousSystem))
  Declaration(Class(:ProcedureOnTheHead))
  Declaration(Class(:ProcedureBySite))
  Declaration(Class(:IntracranialStructure))
  Declaration(ObjectProperty(:hasProcedureSite))

  SubClassOf(:ProcedureOnTheBrain :IntracranialProcedure)
  SubClassOf(:IntracranialProcedure :ProcedureOnTheCentralNervousSystem)
  SubClassOf(:IntracranialProcedure :ProcedureOnTheHead)
  EquivalentClasses(:IntracranialProcedure ObjectIntersectionOf(:ProcedureBySite ObjectSomeValuesFrom(:hasProcedureSite :IntracranialStructure)))
)
""",
    [
        (":IntracranialProcedure", "intracranial procedure", "an", ""),
        (":ProcedureOnTheBrain", "procedure on the brain", "", ""),
        (":ProcedureOnTheCentralNervousSystem", "procedure on the central nervous system", "", ""),
        (":ProcedureOnTheHead", "procedure on the head", "", ""),
        (":ProcedureBySite", "procedure by site", "a", ""),
        (":IntracranialStructure", "intracranial structure", "an", ""),
        (":hasProcedureSite", "has procedure site", "", "has a procedure site"),
    ],
    ":IntracranialProcedure",
    "An intracranial procedure is a kind of procedure on the central nervous system "
    "and procedure on the head. "
    "A more specialised kind of intracranial procedure is procedure on the brain. "
    "Additionally, an intracranial procedure is defined as a procedure by site that "
    "has a procedure site in an intracranial structure.",
)

CASES["appendix_03"] = (
    """Ontology(
  Declaration(Class(:AbdominalAndPelvicVascularStructure))
  Declaration(Class(:AbdominalVascularStructure))
  Declaration(Class(:AbdominalStructure))
  Declaration(Class(:VascularStructureOfTheTrunk))

  SubClassOf(:AbdominalVascularStructure :AbdominalAndPelvicVascularStructure)
  SubClassOf(:AbdominalAndPelvicVascularStructure :VascularStructureOfTheTrunk)
  SubClassOf(:AbdominalVascularStructure ObjectIntersectionOf(:AbdominalStructure :AbdominalAndPelvicVascularStructure))
)
""",
    [
        (":AbdominalAndPelvicVascularStructure", "abdominal and pelvic vascular structure", "an", ""),
        (":AbdominalVascularStructure", "abdominal vascular structure", "an", ""),
        (":AbdominalStructure", "abdominal structure", "an", ""),
        (":VascularStructureOfTheTrunk", "vascular structure of the trunk", "", ""),
    ],
    ":AbdominalAndPelvicVascularStructure",
    "An abdominal and pelvic vascular structure is a kind of vascular structure of "
    "the trunk. "
    "A more specialised kind of abdominal and pelvic vascular structure is abdominal "
    "vascular structure. "
    "Another relevant aspect of abdominal and pelvic vascular structure is that an "
    "abdominal vascular structure is defined as an abdominal structure and an "
    "abdominal and pelvic vascular structure.",
)

CASES["appendix_04"] = (
    """Ontology(
  Declaration(Class(:ChronicDiseaseOfTheGenitourinarySystem))
  Declaration(Class(:ChronicDisease))
  Declaration(Class(:DisorderOfTheGenitourinarySystem))
  Declaration(Class(:ChronicHypertensiveUraemia))
  Declaration(Class(:StructureOfTheGenitourinarySystem))
  Declaration(ObjectProperty(:hasFindingSite))

  SubClassOf(:ChronicDiseaseOfTheGenitourinarySystem :ChronicDisease)
  SubClassOf(:ChronicDiseaseOfTheGenitourinarySystem :DisorderOfTheGenitourinarySystem)
  SubClassOf(:ChronicHypertensiveUraemia :ChronicDiseaseOfTheGenitourinarySystem)
  EquivalentClasses(:ChronicDiseaseOfTheGenitourinarySystem ObjectIntersectionOf(:ChronicDisease :DisorderOfTheGenitourinarySystem ObjectSomeValuesFrom(:hasFindingSite :StructureOfTheGenitourinarySystem)))
)
""",
    [
        (":ChronicDiseaseOfTheGenitourinarySystem", "chronic disease of the genitourinary system", "", ""),
        (":ChronicDisease", "chronic disease", "", ""),
        (":DisorderOfTheGenitourinarySystem", "disorder of the genitourinary system", "a", ""),
        (":ChronicHypertensiveUraemia", "chronic hypertensive uraemia", "", ""),
        (":StructureOfTheGenitourinarySystem", "structure of the genitourinary system", "a", ""),
        (":hasFindingSite", "has finding site", "", "has a finding site"),
    ],
    ":ChronicDiseaseOfTheGenitourinarySystem",
    "Chronic disease of the genitourinary system is a kind of chronic disease and "
    "disorder of the genitourinary system. "
    "A more specialised kind of chronic disease of the genitourinary system is "
    "chronic hypertensive uraemia. "
    "Additionally, chronic disease of the genitourinary system is defined as chronic "
    "disease that is a disorder of the genitourinary system, and has a finding site "
    "in a structure of the genitourinary system.",
)

CASES["appendix_05"] = (
    """Ontology(
  Declaration(Class(:FindingOfTheHeadAndTheNeckRegion))
  Declaration(Class(:FindingOfTheBodyRegion))
  Declaration(Class(:HeadFinding))
  Declaration(Class(:HeadAndNeckStructure))
  Declaration(Class(:HeadStructure))
  Declaration(ObjectProperty(:hasFindingSite))

  SubClassOf(:FindingOfTheHeadAndTheNeckRegion :FindingOfTheBodyRegion)
  SubClassOf(:HeadFinding :FindingOfTheHeadAndTheNeckRegion)
  EquivalentClasses(:FindingOfTheHeadAndTheNeckRegion ObjectIntersectionOf(:FindingOfTheBodyRegion ObjectSomeValuesFrom(:hasFindingSite :HeadAndNeckStructure)))
  EquivalentClasses(:HeadFinding ObjectIntersectionOf(:FindingOfTheHeadAndTheNeckRegion ObjectSomeValuesFrom(:hasFindingSite :HeadStructure)))
)
""",
    [
        (":FindingOfTheHeadAndTheNeckRegion", "finding of the head and the neck region", "a", ""),
        (":FindingOfTheBodyRegion", "finding of the body region", "a", ""),
        (":HeadFinding", "head finding", "a", ""),
        (":HeadAndNeckStructure", "head and neck structure", "a", ""),
        (":HeadStructure", "head structure", "a", ""),
        (":hasFindingSite", "has finding site", "", "has a finding site"),
    ],
    ":FindingOfTheHeadAndTheNeckRegion",
    "A finding of the head and the neck region is a kind of finding of the body "
    "region. "
    "A more specialised kind of finding of the head and the neck region is head "
    "finding. "
    "Additionally, a finding of the head and the neck region is defined as a finding "
    "of the body region that has a finding site in a head and neck structure. "
    "Another relevant aspect of finding of the head and the neck region is that a "
    "head finding is defined as a finding of the head and the neck region that has "
    "a finding site in a head structure.",
)

CASES["appendix_06"] = (
    """Ontology(
  Declaration(Class(:DegenerativeDisorder))
  Declaration(Class(:Nephrosclerosis))
  Declaration(Class(:Disease))
  Declaration(Class(:ArterioscleroticVascularDisease))
  Declaration(Class(:DegenerativeAbnormality))
  Declaration(ObjectProperty(:hasAssociatedMorphology))

  SubClassOf(:Nephrosclerosis :DegenerativeDisorder)
  SubClassOf(:DegenerativeDisorder :Disease)
  SubClassOf(:ArterioscleroticVascularDisease :DegenerativeDisorder)
  EquivalentClasses(:DegenerativeDisorder ObjectIntersectionOf(:Disease ObjectSomeValuesFrom(:hasAssociatedMorphology :DegenerativeAbnormality)))
)
""",
    [
        (":DegenerativeDisorder", "degenerative disorder", "", ""),
        (":Nephrosclerosis", "nephrosclerosis", "", ""),
        (":Disease", "disease", "", ""),
        (":ArterioscleroticVascularDisease", "arteriosclerotic vascular disease", "", ""),
        (":DegenerativeAbnormality", "degenerative abnormality", "a", ""),
        (":hasAssociatedMorphology", "has associated morphology", "", "has an associated morphology"),
    ],
    ":DegenerativeDisorder",
    "Degenerative disorder is a kind of disease. "
    "More specialised kinds of degenerative disorder are nephrosclerosis and "
    "arteriosclerotic vascular disease. "
    "Additionally, degenerative disorder is defined as disease that has an "
    "associated morphology in a degenerative abnormality.",
)

CASES["appendix_07"] = (
    """Ontology(
  Declaration(Class(:KidneyGraftMaterial))
  Declaration(Class(:UrinaryTractMaterial))
  Declaration(Class(:SolidOrganGraftMaterial))
  Declaration(Class(:TransplantOfTheKidney))
  Declaration(Class(:KidneyOperation))
  Declaration(Class(:SolidOrganTransplant))
  Declaration(Class(:RenalReplacement))
  Declaration(Class(:SurgicalTransplantationAction))
  Declaration(Class(:KidneyStructure))
  Declaration(ObjectProperty(:hasMethod))
  Declaration(ObjectProperty(:hasDirectSubstance))
  Declaration(ObjectProperty(:hasIndirectProcedureSite))

  SubClassOf(:KidneyGraftMaterial :UrinaryTractMaterial)
  SubClassOf(:KidneyGraftMaterial :SolidOrganGraftMaterial)
  SubClassOf(:KidneyGraftMaterial ObjectIntersectionOf(:UrinaryTractMaterial :SolidOrganGraftMaterial))
  EquivalentClasses(:TransplantOfTheKidney ObjectIntersectionOf(:KidneyOperation :SolidOrganTransplant :RenalReplacement ObjectSomeValuesFrom(:hasMethod :SurgicalTransplantationAction) ObjectSomeValuesFrom(:hasDirectSubstance :KidneyGraftMaterial) ObjectSomeValuesFrom(:hasIndirectProcedureSite :KidneyStructure)))
)
""",
    [
        (":KidneyGraftMaterial", "kidney graft material", "a", ""),
        (":UrinaryTractMaterial", "urinary tract material", "", ""),
        (":SolidOrganGraftMaterial", "solid organ graft material", "", ""),
        (":TransplantOfTheKidney", "transplant of the kidney", "a", ""),
        (":KidneyOperation", "kidney operation", "a", ""),
        (":SolidOrganTransplant", "solid organ transplant", "a", ""),
        (":RenalReplacement", "renal replacement", "a", ""),
        (":SurgicalTransplantationAction", "surgical transplantation action", "a", ""),
        (":KidneyStructure", "kidney structure", "a", ""),
        (":hasMethod", "has method", "", "has a method"),
        (":hasDirectSubstance", "has direct substance", "", "has a direct substance"),
        (":hasIndirectProcedureSite", "has indirect procedure site", "", "has an indirect procedure site"),
    ],
    ":KidneyGraftMaterial",
    "A kidney graft material is a kind of urinary tract material and solid organ "
    "graft material. "
    "Another relevant aspect of kidney graft material is that a transplant of the "
    "kidney is defined as a kidney operation that is a solid organ transplant, and "
    "is a renal replacement, and has a method in a surgical transplantation action, "
    "and has a direct substance in a kidney graft material, and has an indirect "
    "procedure site in a kidney structure.",
)

CASES["appendix_08"] = (
    """Ontology(
  Declaration(Class(:Graft))
  Declaration(Class(:BiologicalSurgicalMaterial))
  Declaration(Class(:TissueGraftMaterial))
  Declaration(Class(:BodyTissueSurgicalMaterial))

  SubClassOf(:Graft :BiologicalSurgicalMaterial)
  SubClassOf(:TissueGraftMaterial :Graft)
  SubClassOf(:TissueGraftMaterial ObjectIntersectionOf(:Graft :BodyTissueSurgicalMaterial))
)
""",
    [
        (":Graft", "graft", "a", ""),
        (":BiologicalSurgicalMaterial", "biological surgical material", "", ""),
        (":TissueGraftMaterial", "tissue graft material", "a", ""),
        (":BodyTissueSurgicalMaterial", "body tissue surgical material", "a", ""),
    ],
    ":Graft",
    "A graft is a kind of biological surgical material. "
    "A more specialised kind of graft is tissue graft material. "
    "Another relevant aspect of graft is that a tissue graft material is defined as "
    "a graft and a body tissue surgical material.",
)

CASES["appendix_09"] = (
    """Ontology(
  Declaration(Class(:EssentialHypertensionCompPregnancy))
  Declaration(Class(:BenignEssentialHypertensionCompPregnancy))
  Declaration(Class(:EssentialHypertensionObstetric))
  Declaration(Class(:PreExistingHypertensionObstetric))
  Declaration(Class(:BenignEssentialHypertensionObstetric))

  SubClassOf(:BenignEssentialHypertensionCompPregnancy :EssentialHypertensionCompPregnancy)
  SubClassOf(:EssentialHypertensionCompPregnancy :EssentialHypertensionObstetric)
  SubClassOf(:EssentialHypertensionCompPregnancy :PreExistingHypertensionObstetric)
  SubClassOf(:EssentialHypertensionCompPregnancy ObjectIntersectionOf(:EssentialHypertensionObstetric :PreExistingHypertensionObstetric))
  SubClassOf(:BenignEssentialHypertensionCompPregnancy ObjectIntersectionOf(:BenignEssentialHypertensionObstetric :EssentialHypertensionCompPregnancy))
)
""",
    [
        (":EssentialHypertensionCompPregnancy",
         "essential hypertension complicating and/or reason for care during pregnancy", "", ""),
        (":BenignEssentialHypertensionCompPregnancy",
         "benign essential hypertension complicating and/or reason for care during pregnancy", "", ""),
        (":EssentialHypertensionObstetric",
         "essential hypertension in the obstetric context", "", ""),
        (":PreExistingHypertensionObstetric",
         "pre-existing hypertension in the obstetric context", "", ""),
        (":BenignEssentialHypertensionObstetric",
         "benign essential hypertension in the obstetric context", "", ""),
    ],
    ":EssentialHypertensionCompPregnancy",
    "Essential hypertension complicating and/or reason for care during pregnancy is "
    "a kind of essential hypertension in the obstetric context and pre-existing "
    "hypertension in the obstetric context. "
    "A more specialised kind of essential hypertension complicating and/or reason "
    "for care during pregnancy is benign essential hypertension complicating and/or "
    "reason for care during pregnancy. "
    "Another relevant aspect of essential hypertension complicating and/or reason "
    "for care during pregnancy is that benign essential hypertension complicating "
    "and/or reason for care during pregnancy is defined as benign essential "
    "hypertension in the obstetric context and essential hypertension complicating "
    "and/or reason for care during pregnancy.",
)

CASES["appendix_10"] = (
    """Ontology(
  Declaration(Class(:ProcedureOnArteryOfTheAbdomen))
  Declaration(Class(:ProcedureOnTheAbdomen))
  Declaration(Class(:ProcedureOnArteryOfTheThoraxAndTheAbdomen))
  Declaration(Class(:AbdominalArteryImplantation))
  Declaration(Class(:ProcedureOnArtery))
  Declaration(Class(:StructureOfArteryOfTheAbdomen))
  Declaration(ObjectProperty(:hasProcedureSite))

  SubClassOf(:ProcedureOnArteryOfTheAbdomen :ProcedureOnTheAbdomen)
  SubClassOf(:ProcedureOnArteryOfTheAbdomen :ProcedureOnArteryOfTheThoraxAndTheAbdomen)
  SubClassOf(:AbdominalArteryImplantation :ProcedureOnArteryOfTheAbdomen)
  EquivalentClasses(:ProcedureOnArteryOfTheAbdomen ObjectIntersectionOf(:ProcedureOnArtery ObjectSomeValuesFrom(:hasProcedureSite :StructureOfArteryOfTheAbdomen)))
)
""",
    [
        (":ProcedureOnArteryOfTheAbdomen", "procedure on artery of the abdomen", "a", ""),
        (":ProcedureOnTheAbdomen", "procedure on the abdomen", "", ""),
        (":ProcedureOnArteryOfTheThoraxAndTheAbdomen", "procedure on artery of the thorax and the abdomen", "", ""),
        (":AbdominalArteryImplantation", "abdominal artery implantation", "", ""),
        (":ProcedureOnArtery", "procedure on artery", "a", ""),
        (":StructureOfArteryOfTheAbdomen", "structure of artery of the abdomen", "a", ""),
        (":hasProcedureSite", "has procedure site", "", "has a procedure site"),
    ],
    ":ProcedureOnArteryOfTheAbdomen",
    "A procedure on artery of the abdomen is a kind of procedure on the abdomen and "
    "procedure on artery of the thorax and the abdomen. "
    "A more specialised kind of procedure on artery of the abdomen is abdominal "
    "artery implantation. "
    "Additionally, a procedure on artery of the abdomen is defined as a procedure "
    "on artery that has a procedure site in a structure of artery of the abdomen.",
)

CASES["table2_travel"] = (
    """Ontology(
  Declaration(Class(:Settlement))
  Declaration(Class(:AdministrativeDivision))
  Declaration(Class(:City))
  Declaration(Class(:Town))
  Declaration(Class(:Village))

  SubClassOf(:Settlement :AdministrativeDivision)
  SubClassOf(:City :Settlement)
  SubClassOf(:Town :Settlement)
  SubClassOf(:Village :Settlement)
)
""",
    [
        (":Settlement", "settlement", "a", ""),
        (":AdministrativeDivision", "administrative division", "", ""),
        (":City", "city", "", ""),
        (":Town", "town", "", ""),
        (":Village", "village", "", ""),
    ],
    ":Settlement",
    "A settlement is a kind of administrative division. "
    "More specialised kinds of settlement are city, town and village.",
)

CASES["table2_snomed"] = (
    """Ontology(
  Declaration(Class(:BenignHypertensiveRenalDisease))
  Declaration(Class(:HypertensiveRenalDisease))
  Declaration(Class(:BenignArteriolarNephrosclerosis))
  Declaration(Class(:BenignHypertensiveHeartAndRenalDisease))
  Declaration(Class(:KidneyStructure))
  Declaration(ObjectProperty(:RoleGroup))
  Declaration(ObjectProperty(:FindingSite))

  SubClassOf(:BenignHypertensiveRenalDisease :HypertensiveRenalDisease)
  SubClassOf(:BenignArteriolarNephrosclerosis :BenignHypertensiveRenalDisease)
  SubClassOf(:BenignHypertensiveHeartAndRenalDisease :BenignHypertensiveRenalDisease)
  SubClassOf(:BenignHypertensiveRenalDisease ObjectIntersectionOf(:HypertensiveRenalDisease ObjectSomeValuesFrom(:RoleGroup ObjectSomeValuesFrom(:FindingSite :KidneyStructure))))
)
""",
    [
        (":BenignHypertensiveRenalDisease", "benign hypertensive renal disease (disorder)", "", ""),
        (":HypertensiveRenalDisease", "hypertensive renal disease (disorder)", "", ""),
        (":BenignArteriolarNephrosclerosis", "benign arteriolar nephrosclerosis (disorder)", "", ""),
        (":BenignHypertensiveHeartAndRenalDisease", "benign hypertensive heart and renal disease (disorder)", "", ""),
        (":KidneyStructure", "kidney structure (body structure)", "a", ""),
        (":RoleGroup", "rolegroup", "", "rolegroup"),
        (":FindingSite", "finding site (attribute)", "", "a finding site (attribute)"),
    ],
    ":BenignHypertensiveRenalDisease",
    "Benign hypertensive renal disease (disorder) is a kind of hypertensive renal "
    "disease (disorder). "
    "More specialised kinds of benign hypertensive renal disease (disorder) are "
    "benign arteriolar nephrosclerosis (disorder) and benign hypertensive heart and "
    "renal disease (disorder). "
    "Additionally, benign hypertensive renal disease (disorder) is a kind of "
    "hypertensive renal disease (disorder) that rolegroup a finding site (attribute) "
    "a kidney structure (body structure).",
)

CASES["table2_efo"] = (
    """Ontology(
  Declaration(Class(:CaudateNucleus))
  Declaration(Class(:CranialGanglion))
  Declaration(Class(:BasalGanglion))
  Declaration(ObjectProperty(:partOf))

  SubClassOf(:CaudateNucleus :CranialGanglion)
  SubClassOf(:CaudateNucleus ObjectSomeValuesFrom(:partOf :BasalGanglion))
)
""",
    [
        (":CaudateNucleus", "caudate nucleus", "a", ""),
        (":CranialGanglion", "cranial ganglion", "", ""),
        (":BasalGanglion", "basal ganglion", "a", ""),
        (":partOf", "part of", "", "part of"),
    ],
    ":CaudateNucleus",
    "A caudate nucleus is a kind of cranial ganglion. "
    "Additionally, a caudate nucleus is a kind of part of a basal ganglion.",
)


def main():
    FIXTURES.mkdir(exist_ok=True)
    manifest = {}
    for name, (ontology, lexicon, designated, expected) in CASES.items():
        (FIXTURES / f"{name}.ofs").write_text(ontology)
        lines = ["# id\tpreferred name\tarticle\tproperty phrase"]
        for row in lexicon:
            cells = list(row)
            while cells and not cells[-1]:
                cells.pop()
            lines.append("\t".join(cells))
        (FIXTURES / f"{name}.tsv").write_text("\n".join(lines) + "\n")
        manifest[name] = {
            "ontology": f"{name}.ofs",
            "lexicon": f"{name}.tsv",
            "designated": designated,
            "expected": expected,
            "flags": {},
        }
    (FIXTURES / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(CASES)} fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
