"""Write the bundled mini corpus: 22 sports docs (football/cricket/tennis/athletics)
plus 12 computing docs. Word placement is deliberate so the clustering demo has
clean topical structure:
  - "sport(s)" appears in 16 docs: 5 per topic (of 6) plus the sprint report.
  - each topic label (football/cricket/tennis) appears in all 6 of its docs.
  - each topic has 3-4 support words, each in exactly 3 sport-mentioning docs.
  - everything else stays at document frequency <= 2 or co-occurs weakly.
"""
import pathlib

DOCS = {
# ---------------- football (6 docs, "sport" in all but transfers) ----------
"sports_football_cup_final.txt": """The cup climax drew a record football crowd to the capital. The underdogs took an early lead with a header, stunning the favourites. Crisp passing pulled the defence apart, and the striker levelled the score within minutes. Extra time left tired legs and a nervous hush in the stands. The winning goal came from a penalty, and the captain lifted the trophy after forty barren years. Sports fans will retell this one for decades.""",

"sports_football_derby.txt": """The city derby was the most intense football fixture of the autumn. Both teams pressed high from the whistle, and the fans never sat down. A curling shot from the young striker put the home side ahead before the break. The visitors equalized from a corner, silencing half the ground. In stoppage time the veteran midfielder drilled in the winning goal. Local sports writers called it the derby of the decade.""",

"sports_football_relegation.txt": """Relegation worry hung over the football club from the first week of august. Injuries left the manager without three regular starters for months. Goals dried up, and the side slid down the table fixture by fixture. A january signing steadied the defence and belief returned to the dressing room. Victory in the closing round kept the club up, and the sports pages hailed a great escape.""",

"sports_football_tactics.txt": """Modern football tactics are a pet topic on every sports channel. The coach explained how a back three changes the shape of the side in and out of possession. Wing backs push forward like wingers while the midfield sits deep to cover. The striker is asked to press the goalkeeper on every pass. Pundits now debate formations as keenly as they once debated transfers.""",

"sports_football_youth.txt": """The club's youth setup promoted five teenagers to the first squad this spring. The coach believes youngsters develop faster alongside experienced professionals. In their debut the newcomers pressed bravely and created the better chances. Two of them scored before the hour, delighting the home fans. Scouts from bigger clubs looked on from the stands, as always happens in modern football. Sporting futures take shape on evenings like these.""",

"sports_football_transfers.txt": """The january transfer window closed with a frantic final hour for the football club. The board sanctioned a club record fee for a winger from the coast. Two fringe midfielders moved out on loan in search of minutes. The manager called the business sensible rather than spectacular. Supporters argued about the fee on phone-ins all evening.""",

# ---------------- cricket (6 docs, "sport" in all but village) -------------
"sports_cricket_test.txt": """The test swung back and forth for five astonishing days of cricket. The senior batsman carried his bat through the innings for a patient century. On a wearing surface the spinners took wicket after wicket in the afternoon sessions. The visiting captain declared early, gambling everything on the evening light. A dropped catch at slip cost the hosts dearly, and correspondents described it as the sporting collapse of the decade.""",

"sports_cricket_world_cup.txt": """A packed arena watched cricket's global showpiece under lights. The chasing team needed twelve runs from the closing over, with one wicket in hand. The young batsman struck consecutive boundaries and scrambled the decisive run off the last ball. Cricketers and supporters wept openly during the trophy presentation. Commentators across the sports world hailed it as the greatest one day contest ever staged.""",

"sports_cricket_academy.txt": """The cricket board launched a new academy on the edge of the city. Every young batsman there rehearses century building against tired bowlers in the nets. A sports scientist monitors workloads so the quicks avoid stress fractures. Video analysts chart each session and flag flaws frame by frame. The first graduates already appear in first class cricket.""",

"sports_cricket_spin.txt": """The art of spin still decides cricket on dry surfaces. The old spinner flighted every delivery, inviting the drive and the mistake. Wicket after wicket fell to turning balls as the afternoon wore on. A patient century from the visiting opener briefly held up the procession. Bowlers of this kind, purists say, are the soul of the sport.""",

"sports_cricket_county.txt": """The county season opened under grey skies and a biting wind. Cricket in april rewards bowlers who pitch the ball up and let the air do the rest. The young quick from the academy staff took five on debut, swinging it both ways. Members huddled under blankets applauded every boundary with gloved hands. Local sports radio devoted the whole evening to the newcomer.""",

"sports_cricket_village.txt": """Village cricket returned to the meadow after two summers away. The blacksmith still bowls off a run of three paces, and the postman still edges everything to the boundary. Teas are taken in the pavilion that doubles as a polling station. Nobody keeps a proper average, although everybody remembers a fifty from years ago. The light fades, the stumps come out, and the season is declared perfect.""",

# ---------------- tennis (6 docs, "sport" in all but clay) -----------------
"sports_tennis_final.txt": """The tennis showpiece stretched to five sets on a scorching day. The champion's serve deserted her midway through, and the challenger went after anything loose. Rallies of thirty strokes had the gallery on its feet. At championship point the hillside seats fell silent before a backhand winner down the line. Sports historians already rank it among the finest deciders ever staged.""",

"sports_tennis_injury.txt": """The former champion returned to the tennis court after a year away. A surgeon rebuilt the wrist that powers his famous serve. His earliest rounds showed rust, with errors flying from both wings. By the second week the rallies lengthened and his level rose. He reached the last four, and sports medicine, he said, gave him a second career.""",

"sports_tennis_rising_star.txt": """A sixteen year old qualifier became the story of the tennis fortnight. Her fearless return game unsettled seeded rivals twice her age. On the main court she moved like a veteran, gliding to every angle. Coaches from the state sports institute studied her quarterfinal from the front row. She lost narrowly, but the performance announced a new star.""",

"sports_tennis_doubles.txt": """The doubles pairing surprised everyone at the tennis championships. Neither partner owned a big serve, so they won points with angles and anticipation at the net. Their coach drilled signals for every return until the patterns became instinct. They dismantled the top seeds in straight sets to take the title. Sports reporters voted their craft the highlight of the fortnight.""",

"sports_tennis_grass.txt": """The grass season opened with the tennis tour scattered across small english clubs. The surface rewards a low skidding slice, and long rallies die before they begin. On the outside court a veteran taught a masterclass in volleying. Groundskeepers watered and rolled between every session under a hot sun. Sports photographers crowded the fences for the late golden light.""",

"sports_tennis_clay.txt": """Clay is the slowest surface in tennis and the most honest teacher. Points are built stroke by stroke, and nothing is given away cheaply. The sliding footwork takes years to learn and a lifetime to master. Young baseliners grow up here trading heavy topspin until an opening appears. Every champion of the red dust earns the crown the hard way.""",

# ---------------- other sports (sprint mentions "sport") -------------------
"sports_olympic_sprint.txt": """The olympic sprint was settled in barely ten strides yet filled every sports page. The title holder false started and walked from the track in tears. In her absence the race lost its script, and an unknown athlete in lane eight took gold. Her time erased a national record that had stood for a generation. The stadium roared as the anthem played.""",

"sports_olympic_marathon.txt": """Heat and humidity turned the olympic marathon into a brutal test of endurance. Runners poured water over their heads at every station along the course. The leading athlete collapsed within sight of the stadium and could not finish. A patient veteran inherited the race and ran the final lap of the track alone. Doctors treated dozens of exhausted finishers, and organisers promised cooler start conditions next cycle.""",

"sports_athletics_record.txt": """The athletics meeting produced a world record on a still evening. The high jumper cleared a height that coaches had ruled impossible for a decade. Earlier the relay squad ran the quickest split of the summer despite a clumsy exchange. A javelin thrower won her event with her very last attempt. The stadium announcer could barely keep pace with the results board.""",

"sports_training_science.txt": """Training science has changed how every professional squad prepares. Athletes wear trackers that log distance covered in sessions and in competition. Staff plan recovery around sleep data and regular blood panels. A squad doctor explained that small daily measurements prevent the big injuries. Even school programmes now borrow these methods, said Dr. Lane, a veteran of three olympic cycles.""",

# ---------------- computing (12 docs) --------------------------------------
"computing_compiler.txt": """The new compiler turns source code into faster machine programs. Its optimizer removes redundant instructions and reorders memory operations. Developers reported that compiled software runs twenty percent faster on the same computer. The project published the code under an open licence, and outside programmers quickly sent patches. A careful test suite keeps every optimization honest.""",

"computing_database.txt": """The database engine stores each record in an ordered file of fixed pages. An index maps every key to the page that holds its data. When a query arrives, the planner chooses between a full scan and an index lookup. Transactions write their changes to a log before touching the main file, so a crash never corrupts the data. The software has run for a decade on modest server hardware.""",

"computing_network_outage.txt": """A routing error knocked half the company network offline for an hour. Engineers traced the outage to a configuration change pushed without review. Backup links carried the critical data while the faulty router was isolated. The postmortem recommended automatic checks on every network change. The incident cost little, but the lesson reshaped the release process.""",

"computing_search_engine.txt": """The search engine began as a weekend project and grew into the laboratory's workhorse. A crawler fetches pages, strips the markup, and stores the plain text of each document. The indexer records which documents contain each word, so a query needs only a few lookups. Common words are dropped from the index because they carry no topical signal. The remaining words are reduced to their stems, letting plural and singular forms share one entry. Ranking software orders matching documents by how well their words fit the query. A small cache keeps the most frequent queries ready in memory. The whole index rebuilds from scratch in under a minute on one server. Engineers measure quality against a hand labelled set of documents and queries. Precision climbed steadily as the stopword list and the stemmer matured. Students now borrow the code for their own document collections. The lesson, the maintainers say, is that a simple index taken seriously beats a clever one taken casually.""",

"computing_machine_learning.txt": """The research group trained a model to sort documents by subject. The algorithm learns from labelled examples, adjusting millions of weights. Training ran for a week on a rack of computers in the basement. The finished software tags incoming documents in milliseconds. Engineers still review a sample by hand, because no algorithm is perfect.""",

"computing_security_patch.txt": """A security researcher found a flaw in the login code of the popular software. An attacker could send a crafted request and read another user's data. The developers shipped a patch within two days and rotated every server key. Customers were asked to update their computers immediately. The company now pays rewards for responsibly reported bugs in its programs.""",

"computing_operating_system.txt": """The operating system schedules every program that runs on the computer. Each process believes it owns the machine, while the kernel shares the hardware among them. Memory protection keeps a buggy program from corrupting another's data. Drivers translate requests from software into commands the devices understand. Decades of engineering hide behind a single boot screen.""",

"computing_version_control.txt": """The developers moved their software history into a distributed version control system. Every engineer now holds a complete copy of the code and its past. Branches let programmers test risky changes without touching the main line. Merge tools highlight conflicting edits before anything is lost. Releases are tagged, so any old build can be reproduced exactly.""",

"computing_cloud_migration.txt": """The company migrated its software from a basement server room to rented infrastructure. Engineers packaged each program in a container with its data and settings. Load balancers now spread network traffic across dozens of machines. Costs fell because idle computers are switched off automatically. The old servers were donated to a local electronics club.""",

"computing_programming_course.txt": """The university rebuilt its introductory programming course around small projects. Students write code from the first lecture and test it on real data. A friendly checker explains each error instead of printing a cryptic number. Assistants review style as well as correctness in every submission. Enrolment doubled within two years of the change.""",

"computing_hardware_chips.txt": """The new processor packs two hundred billion transistors onto a single die. Designers simulated the whole computer in software for a year before manufacturing began. Early benchmarks show the chip doubling the pace of data heavy programs. Laptops built around it stay cool under sustained load. Rival companies have already promised faster silicon within a year.""",

"computing_open_source.txt": """The open source project celebrated twenty years with a fresh release of its software. Hundreds of developers around the world contribute code through public review. Maintainers test every change against a suite that encodes decades of fixed bugs. Companies that depend on the program fund full time engineers to keep it healthy. The licence guarantees that the code and its data formats stay open.""",
}

out = pathlib.Path("/root/pkg/src/querysum/data/minicorpus")
if out.exists():
    for p in out.iterdir():
        p.unlink()
out.mkdir(parents=True, exist_ok=True)
for name, body in DOCS.items():
    text = " ".join(line.strip() for line in body.strip().splitlines())
    (out / name).write_text(text + "\n", encoding="utf-8")
print(f"wrote {len(DOCS)} docs")

TITLES = {'sports_football_cup_final.txt': 'Cup climax: underdogs lift the trophy', 'sports_football_derby.txt': 'Derby of the decade settled in stoppage time', 'sports_football_relegation.txt': 'Great escape keeps the club up', 'sports_football_tactics.txt': 'Back three tactics explained', 'sports_football_youth.txt': 'Five teenagers promoted to the first squad', 'sports_football_transfers.txt': 'Transfer window closes with record fee', 'sports_cricket_test.txt': 'Five day test ends in a sporting collapse', 'sports_cricket_world_cup.txt': 'World showpiece decided off the last ball', 'sports_cricket_academy.txt': 'Cricket board opens an academy', 'sports_cricket_spin.txt': 'Spin still decides cricket on dry surfaces', 'sports_cricket_county.txt': "County season opens with a young quick's five", 'sports_cricket_village.txt': 'Village cricket returns to the meadow', 'sports_tennis_final.txt': 'Five set showpiece ends with a backhand winner', 'sports_tennis_injury.txt': 'Former champion returns from wrist surgery', 'sports_tennis_rising_star.txt': 'Sixteen year old qualifier lights up the fortnight', 'sports_tennis_doubles.txt': 'Doubles pair dismantle the top seeds', 'sports_tennis_grass.txt': 'Grass season opens at the small clubs', 'sports_tennis_clay.txt': 'Clay, the slowest and most honest surface', 'sports_olympic_sprint.txt': 'Olympic sprint settled in ten strides', 'sports_olympic_marathon.txt': 'Marathon becomes a brutal test of endurance', 'sports_athletics_record.txt': 'World record falls at the athletics meeting', 'sports_training_science.txt': 'How training science reshaped preparation', 'computing_compiler.txt': 'New compiler speeds up compiled programs', 'computing_database.txt': 'Inside a crash safe database engine', 'computing_network_outage.txt': 'Routing error takes half the network offline', 'computing_search_engine.txt': 'A small search engine taken seriously', 'computing_machine_learning.txt': 'Training a model to sort documents', 'computing_security_patch.txt': 'Login flaw patched within two days', 'computing_operating_system.txt': 'What an operating system actually does', 'computing_version_control.txt': 'Moving history into version control', 'computing_cloud_migration.txt': 'From basement servers to rented machines', 'computing_programming_course.txt': 'Rebuilding the introductory programming course', 'computing_hardware_chips.txt': 'Two hundred billion transistors on one die', 'computing_open_source.txt': 'Twenty years of an open source project'}

import json
manifest = [
    {"source": f"minicorpus/{name}", "title": title}
    for name, title in sorted(TITLES.items())
]
manifest_path = out.parent / "minicorpus_manifest.json"
manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
print(f"wrote manifest with {len(manifest)} entries")

