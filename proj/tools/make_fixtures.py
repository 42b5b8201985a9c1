#!/usr/bin/env python3
# Copyright 2026 The sdgtag Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the small sample dataset under data/.

The output is deterministic; rerun after editing the tables below.
"""

import csv
import json
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

# Root fields of study.
ROOTS = [
    ("F0001", "environmental science", "Study of the natural environment, ecosystems and human impact on them."),
    ("F0002", "economics", "Study of production, distribution, markets, prices and economic policy."),
    ("F0003", "medicine", "Clinical practice, diagnosis and treatment of disease in patients."),
    ("F0004", "social science", "Study of societies, institutions and relationships among people."),
    ("F0005", "engineering", "Design and construction of machines, structures and technical systems."),
]

# sdg -> [(fos_id, name, parent, document)]
LINKED = {
    1: [("F0101", "poverty", "F0002", "Households living below the poverty line lack income, assets and basic needs; extreme deprivation persists in rural villages."),
        ("F0102", "social protection", "F0004", "Cash transfers, pensions and safety nets shield vulnerable households from shocks and destitution."),
        ("F0103", "microfinance", "F0002", "Small loans and savings groups give poor entrepreneurs access to credit without collateral.")],
    2: [("F0201", "food security", "F0002", "Reliable access to sufficient, affordable food and stable harvests prevents hunger and famine."),
        ("F0202", "agronomy", "F0001", "Crop yields, soil fertility, irrigation and seed varieties determine farm productivity."),
        ("F0203", "malnutrition", "F0003", "Stunting, wasting and micronutrient deficiency harm child growth and nutrition.")],
    3: [("F0301", "epidemiology", "F0003", "Incidence, prevalence and transmission of infectious disease across populations and cohorts."),
        ("F0302", "public health", "F0003", "Mortality, life expectancy and health services for communities and hospitals."),
        ("F0303", "vaccination", "F0003", "Immunization programmes and vaccine coverage protect children against measles and polio.")],
    4: [("F0401", "education", "F0004", "Schools, teachers and classrooms deliver primary and secondary schooling to pupils."),
        ("F0402", "literacy", "F0004", "Reading and writing skills, numeracy and adult learning outcomes."),
        ("F0403", "pedagogy", "F0004", "Teaching methods, curriculum design and student assessment in the classroom.")],
    5: [("F0501", "gender equality", "F0004", "Equal rights and opportunities for women and girls, closing the gender gap in pay and leadership."),
        ("F0502", "feminism", "F0004", "Movements for women's empowerment, emancipation and representation in politics."),
        ("F0503", "gender-based violence", "F0004", "Domestic abuse, harassment, femicide and violence against women and girls.")],
    6: [("F0601", "water supply", "F0005", "Drinking water, pipelines, wells and reservoirs serve households and municipalities."),
        ("F0602", "sanitation", "F0005", "Toilets, sewage treatment and hygiene prevent contamination and open defecation."),
        ("F0603", "hydrology", "F0001", "Rivers, aquifers, groundwater recharge and watershed runoff dynamics.")],
    7: [("F0701", "renewable energy", "F0005", "Wind turbines, hydropower and biomass supply clean electricity to the grid."),
        ("F0702", "solar energy", "F0005", "Photovoltaic panels and solar cells convert sunlight into electric power."),
        ("F0703", "energy efficiency", "F0005", "Insulation, efficient appliances and lighting reduce electricity consumption in buildings.")],
    8: [("F0801", "labour economics", "F0002", "Wages, employment contracts, labour markets and decent working conditions."),
        ("F0802", "unemployment", "F0002", "Jobless workers, youth unemployment rates and job search duration."),
        ("F0803", "economic growth", "F0002", "Gross domestic product, productivity and output expansion per capita.")],
    9: [("F0901", "infrastructure", "F0005", "Roads, bridges, ports and broadband networks underpin connectivity."),
        ("F0902", "industrialization", "F0005", "Manufacturing plants, factories and industrial value added."),
        ("F0903", "innovation", "F0005", "Research and development, patents and technology startups.")],
    10: [("F1001", "income inequality", "F0002", "Gini coefficient, wealth concentration and the distribution of earnings."),
         ("F1002", "migration", "F0004", "Migrants, refugees, remittances and cross-border mobility."),
         ("F1003", "social exclusion", "F0004", "Discrimination and marginalization of minorities and disabled people.")],
    11: [("F1101", "urban planning", "F0005", "Zoning, land use and city design for growing metropolitan areas."),
         ("F1102", "public transport", "F0005", "Buses, trams, metro lines and commuter rail ridership."),
         ("F1103", "housing", "F0004", "Affordable dwellings, slums, rent and homelessness in cities.")],
    12: [("F1201", "recycling", "F0001", "Collection and reprocessing of plastic, paper and glass into new materials."),
         ("F1202", "waste management", "F0001", "Landfill, incineration and municipal solid waste disposal."),
         ("F1203", "sustainable consumption", "F0002", "Circular economy, product lifecycle and responsible purchasing by consumers.")],
    13: [("F1301", "climate change", "F0001", "Climate change raises temperatures and shifts precipitation; carbon emissions alter the climate system."),
         ("F1302", "greenhouse gas", "F0001", "Carbon dioxide, methane and nitrous oxide emissions trap heat in the atmosphere."),
         ("F1303", "climate adaptation", "F0001", "Adaptation and resilience planning against droughts, floods and heatwaves under a changing climate."),
         ("F1304", "global warming", "F0001", "Global warming of the atmosphere, rising temperatures and melting glaciers.")],
    14: [("F1401", "marine biology", "F0001", "Coral reefs, plankton and marine species in coastal and ocean ecosystems."),
         ("F1402", "fisheries", "F0002", "Fish stocks, overfishing, catch quotas and aquaculture."),
         ("F1403", "ocean acidification", "F0001", "Seawater pH decline dissolves shells and damages reefs.")],
    15: [("F1501", "biodiversity", "F0001", "Species richness, habitats and wildlife conservation in terrestrial ecosystems."),
         ("F1502", "deforestation", "F0001", "Logging and clearing of tropical forests and rainforest loss."),
         ("F1503", "desertification", "F0001", "Land degradation, soil erosion and drylands turning into desert.")],
    16: [("F1601", "armed conflict", "F0004", "War, civil unrest, insurgency and ceasefire negotiations."),
         ("F1602", "corruption", "F0004", "Bribery, embezzlement and fraud by public officials."),
         ("F1603", "rule of law", "F0004", "Courts, judicial independence, justice and accountable institutions.")],
    17: [("F1701", "development aid", "F0002", "Official development assistance, donors and foreign aid disbursement."),
         ("F1702", "international trade", "F0002", "Exports, imports, tariffs and trade agreements between countries."),
         ("F1703", "capacity building", "F0004", "Technical assistance and training that strengthen national statistical offices.")],
}

UNLINKED = [
    ("F9001", "mathematics", None, "Algebra, topology, theorems, proofs and number theory."),
    ("F9002", "computer science", "F0005", "Algorithms, compilers, software and data structures."),
    ("F9003", "linguistics", "F0004", "Syntax, phonology, morphology and semantics of languages."),
    ("F9004", "philosophy", None, "Ethics, metaphysics, epistemology and logic."),
    ("F9005", "astronomy", None, "Stars, galaxies, telescopes and planetary orbits."),
    ("F9006", "musicology", None, "Melody, harmony, rhythm and composition of music."),
    ("F9007", "chemistry", None, "Molecules, reactions, catalysts and chemical bonds."),
    ("F9008", "statistics", "F9001", "Regression, sampling, estimators and hypothesis tests."),
]

# Six ontology sources; each lists (term, sdg) rows. Near-miss spellings
# such as "climate changes" exercise the fuzzy linker; a few rows are
# deliberately invalid to exercise row-level warnings.
SOURCES = [
    ("expert_ontology", "Expert keyword ontology", "csv", [
        ("Poverty", 1), ("extreme poverty", 1), ("Social Protection", 1), ("Food Security", 2),
        ("hunger", 2), ("Epidemiology", 3), ("Public Health", 3), ("Education", 4),
        ("Gender Equality", 5), ("Water Supply", 6), ("Renewable Energy", 7),
        ("Economic Growth", 8), ("Infrastructure", 9), ("Income Inequality", 10),
        ("Urban Planning", 11), ("Recycling", 12), ("Climate Change", 13),
        ("Greenhouse Gas", 13), ("Marine Biology", 14), ("Biodiversity", 15),
        ("Armed Conflict", 16), ("Development Aid", 17), ("not a goal", 18),
    ]),
    ("project_mapping", "Research project mapping", "json", [
        ("microfinance", 1), ("agronomy", 2), ("vaccination", 3), ("literacy", 4),
        ("feminism", 5), ("sanitation", 6), ("solar energy", 7), ("unemployment", 8),
        ("innovation", 9), ("migration", 10), ("public transport", 11),
        ("waste management", 12), ("climate changes", 13), ("fisheries", 14),
        ("deforestation", 15), ("corruption", 16), ("international trade", 17),
    ]),
    ("topic_model_terms", "Topic model keywords", "csv", [
        ("malnutrition", 2), ("pedagogy", 4), ("gender based violence", 5),
        ("hydrology", 6), ("energy efficiency", 7), ("labour economics", 8),
        ("industrialisation", 9), ("social exclusion", 10), ("housing", 11),
        ("sustainable consumption", 12), ("climate adaptation", 13),
        ("global warming", 13), ("ocean acidification", 14),
        ("desertification", 15), ("rule of law", 16), ("capacity building", 17),
    ]),
    ("linked_concepts", "Linked open concepts", "json", [
        ("poverty", 1), ("food security", 2), ("public health", 3),
        ("climate change", 13), ("green house gas", 13), ("biodiversity", 15),
        ("migration", 10), ("migration", 8), ("education", 4),
    ]),
    ("sdg_interface_ontology", "SDG interface ontology", "csv", [
        ("sustainable development", 17), ("water supply", 6), ("sanitation", 3),
        ("gender equality", 10), ("renewable energy", 13), ("deforestation", 13),
        ("fisheries", 2), ("infrastructure", 11), ("armed conflict", 10),
    ]),
    ("policy_keywords", "Policy document keywords", "csv", [
        ("Climate Change!", 13), ("carbon emissions", 13), ("decent work", 8),
        ("universal health coverage", 3), ("affordable housing", 11),
        ("marine biology", 14), ("", 4), ("resilience", "thirteen"),
    ]),
]

DOIS = [
    {"doi": "10.1787/4bdaeb8c-en",
     "title": "Financing climate action",
     "abstract": "<jats:p>Greenhouse gas emissions from carbon dioxide and methane drive global warming. "
                 "Climate change adaptation and resilience against droughts and floods require planning "
                 "as temperatures rise and glaciers melt.</jats:p>"},
    {"doi": "10.5281/zenodo.3567769",
     "title": "Keyword ontology for the Sustainable Development Goals",
     "abstract": "Schools and teachers improve literacy, reading and numeracy; curriculum design and "
                 "teaching methods raise student learning outcomes in primary classrooms."},
    {"doi": "10.1000/water.2020.001",
     "title": "Rural water access",
     "abstract": "Drinking water from wells and reservoirs, toilets and sewage treatment for households."},
    {"doi": "10.1000/no.abstract",
     "title": "Editorial",
     "abstract": "   "},
]

SDG13_TEXT = ("Carbon dioxide and methane emissions trap heat in the atmosphere and drive global warming. "
              "Rising temperatures and melting glaciers signal climate change, and adaptation planning "
              "builds resilience against droughts, floods and heatwaves.")


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def main():
    (DATA / "sources").mkdir(parents=True, exist_ok=True)

    fos = [(i, n, None, d) for i, n, d in ROOTS]
    for entries in LINKED.values():
        fos.extend(entries)
    fos.extend(UNLINKED)
    fos.sort(key=lambda e: e[0])
    write_csv(DATA / "fos_catalog.csv", ["fos_id", "name", "parent_id"],
              [(i, n, p or "") for i, n, p, _ in fos])
    with open(DATA / "fos_corpus.jsonl", "w", encoding="utf-8") as f:
        for i, _, _, d in fos:
            f.write(json.dumps({"fos_id": i, "text": d}) + "\n")

    manifest_sources = []
    for sid, name, fmt, rows in SOURCES:
        path = DATA / "sources" / f"{sid}.{fmt}"
        if fmt == "csv":
            write_csv(path, ["term", "sdg"], rows)
        else:
            path.write_text(json.dumps([{"term": t, "sdg": s} for t, s in rows], indent=2) + "\n",
                            encoding="utf-8")
        manifest_sources.append({"source_id": sid, "name": name, "origin": "sample fixture",
                                 "path": f"sources/{sid}.{fmt}", "format": fmt})

    thresholds = {"default": {"moderate": 0.1, "strong": 0.3}}
    (DATA / "thresholds.json").write_text(json.dumps(thresholds, indent=2) + "\n", encoding="utf-8")

    with open(DATA / "dois.jsonl", "w", encoding="utf-8") as f:
        for d in DOIS:
            f.write(json.dumps(d) + "\n")

    (DATA / "sdg13_text.txt").write_text(SDG13_TEXT + "\n", encoding="utf-8")

    manifest = {
        "sources": manifest_sources,
        "fos_catalog": "fos_catalog.csv",
        "fos_corpus": "fos_corpus.jsonl",
        "thresholds": "thresholds.json",
        "stopwords": "stopwords.txt",
        "link_threshold": 0.85,
        "top_k": 20,
        "min_sim": 0.1,
        "output_dir": "../build/artifacts",
        "created_at": "2026-01-01T00:00:00Z",
        "doi": {"fixture": "dois.jsonl", "max_in_flight": 4},
        "service": {"host": "127.0.0.1", "port": 8080,
                    "feedback_store": "../build/feedback.jsonl"},
    }
    (DATA / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
