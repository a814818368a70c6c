#!/usr/bin/env python3
"""Regenerate the frozen stemmer agreement fixture.

The canonical published word/stem lists cannot be fetched in an offline
environment, so this script builds a ~23k-word vocabulary that exercises
every rule path (all suffixes crossed with real and synthetic stems,
plus edge cases), and computes the expected stems with the independent
reference implementation in tests/porter_reference.py. Outputs:

    tests/data/porter_vocabulary.txt
    tests/data/porter_expected.txt

Run from the repository root:  python scripts/build_porter_fixture.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from porter_reference import reference_stem  # noqa: E402

BASES = """
abandon absorb accept accompani accus ach act adapt add adjust admir admit
adopt ador advanc advis affect agre aid aim alarm allow amaz amus analy anchor
anger annoy answer appeal appear applaud appli approach approv argu arm arrang
arrest arriv ask assault assert assess assign assist assum assur astonish
attach attack attempt attend attract avoid await award back bak balanc ban
bang bar bat bath batter beat beg believ belong bend bet betray bid bind bit
blam blast bleed bless blind block bloom blot blow blur board boast boil bolt
bomb bond book boost border bother bottl bounc bow brag brand break breath
brew brib bridg brief broadcast bruis brush budg build bump burn burst buri
bush buzz calm camp capt card carri cast catch caus ceas celebr certifi chain
challeng chang chant charg charm chart chas chat cheat check cheer chew chill
chip chop claim clash clasp clean clear climb cling clip cloth cloud club
clutch coach coast coat coax coil collect color comb combin comfort command
comment commit compar compet complain complet comput conced concern conclud
condemn conduct confess confid confirm conflict conform confront confus
connect consent consid consist consol construct consult consum contact contain
contend contest continu contract contrast contribut convert convinc cook cool
coop cop correct corrupt cost cough count cover crack craft crash crawl creat
credit creep crush cultiv cur curb curl curv cut cycl dam damag danc dar dash
deal debat decay deceiv decid declar declin decorat dedicat defeat defend defi
delay deliv demand deni depart depend deposit depress deriv descend describ
desert deserv design desir destroy detect determin develop devot dictat differ
digest direct disagre disarm discharg disclos discount discover discuss
dismiss display dispos disput dissolv distinguish distribut disturb div divid
donat doubt draft drag drain draw dream dress drift drill drink drip driv drop
drown drum dry duck dump dwell earn eas eat echo edit educat eject elect
embark emerg employ empti enact enclos encount encourag end endur enforc engag
enjoy enlarg enlist enrich ensur entertain entitl entri equip escap establish
esteem estimat evad evalu evapor even evok exact examin exceed exchang excit
exclud excus execut exert exhaust exhibit exist expand expect expel experi
explain explod explor expos express extend fac fad fail faint fall fals fancy
fasten fault favor fear feed feel fenc fetch fight figur fil fill film filter
find finish fire fit fix flap flash flatten flee float flood flow fold follow
forbid forc forecast forgiv form foster found frame fre freez frighten fry
fuel function furnish gain gard gasp gather gaz gear generat gift giv glanc
glow glu grab grad grant grasp graz greet grind grip groan ground grow guard
guess guid gulp gush hand handl hang happen harm hast hatch haul heal heap
heat help hesit hid hint hiss hit hold hook hop host howl hug hunt hurri hurt
ignit ignor illustrat imagin imitat implement impli import impos impress
improv includ increas indicat induc infect inflat inform inhabit inherit
initi inject injur inquir insert insist inspect inspir install instruct
insult insur intend interest interfer interpret interrupt introduc invad
invent invest invit involv iron irrit isol issu itch jail jam jog join jok
judg jump justifi keep kick kill kiss knit knock knot know label labor lack
land last laugh launch lay lead leak lean leap learn leav lend let level
licens lick lift light limit link list listen liv load loan lock lodg log
long look loos lost lov lower maintain mak manag march mark market marri
match mat mater measur meet melt mend mention merg mess might mind mingl miss
mix moan mock model modifi monitor motiv mount mourn mov mutter nail nam need
neglect negotiat nest nibbl nod nominat not notic number obey object observ
obtain occupi occur offend offer open oper oppos order organiz orient outlin
overcom overflow overlook overtak overwhelm ow pack paint pair pardon park
part pass past pat paus pay peck peel perceiv perch perform permit persist
persuad phon pick pictur pil pin pinch pitch plac plan plant play plead pleas
pledg plot plug plung point pois polish poll pop portray pos possess post
pour practic prais pray preach preced predict prefer prepar prescrib present
preserv press pressur presum pretend prevail prevent prick print proceed
process produc profess profit progress project promis promot prompt pronounc
propos protect protest prov provid provok pull pump punch punish purchas purs
push put puzzl qualifi question quot rac rais rank rat reach react read reason
rebel recal receiv reckon recogn recommend record recover reduc refer reflect
reform refus regard regret regulat reinforc reject relat relax releas reliev
remain remark rememb remind remov render rent repair repeat replac repli
report repres request requir rescu resembl reserv resid resist resolv resort
respect respond rest restor restrain restrict result resum retain retir
retreat return reveal revers review reviv reward rid ring rins ris risk roam
roar rob rock roll rot rub ruin rul run rush sack sail sampl satisfi sav scan
scar scatter school scoop scor scrap scratch scream screw seal search season
secur seek seiz select sell send sens serv set settl sew shak shap shar sharpen
shatter shed shelter shift shin ship shock shoot shop shout shov show shrink
shrug shut sigh sign signal sing sink sip sit sketch ski skip slam slap sleep
slid slip slow smash smell smil smok snap snatch sneak sniff soak sob solv
sooth sort sound sow spar spark speak specifi spell spend spill spin split
spoil sponsor spot spray spread spring sprinkl squeez stab stack stain stamp
stand star start starv stat stay steal steer stem step stick stir stitch stop
stor storm strain strengthen stretch strid strik strip striv stroll struggl
studi stuff stumbl submit subscrib substitut succeed suck suffer suggest suit
suppli support suppos surg surpris surrender surround survey surviv suspect
suspend swallow sway swear sweep swell swim swing switch tackl tak talk tam
tap tast teach tear teas tell tempt tend test thank think threaten thrill
throw thrust tick tickl tie tighten tilt tim tip toss touch tour trac track
trad trail train transfer transform translat transport trap travel treat
trembl tri trick trip trot troubl trust tuck tun turn twist undergo undertak
unfold unit unlock upset urg vanish vari ventur verifi view visit wag wait
wak walk wander want warm warn wash wast watch wav wear weav weigh welcom
whip whisper whistl win wind wip wish withdraw wonder work worri wrap wreck
wrestl wring writ yell yield zoom
""".split()

SUFFIXES = """
s es ies ss sses ed eed ing ings ation ations ational ization izations
izational tion tional tions ence ences enci anci ance ances izer izers abli
bli alli entli eli ousli ator ators alism ism isms iveness fulness ousness
ness aliti iviti biliti icate icates ative alize alizes iciti ical ful al
ence er ers ic able ible ant ants ement ements ment ments ent ion ions ou
ous ive ize izes ate ates iti y ly ility est eth
""".split()

EDGE_WORDS = """
a i be by do go he it me no of on or so to up us we ace act add age ago aid
aim air all and ani ant api apt arc are ark arm art ash ask ate awe axe aye
bad bag ban bar bat bay bed bee beg bet bid big bin bit boa bob bog bow box
boy bud bug bun bus but buy bye cab can cap car cat cow cry cup cut dab dad
dam day den dew did die dig dim din dip dog dot dry dub dud due dug duo dye
ear eat ebb eel egg ego eke elf elk elm end eon era erg err eve ewe eye fad
fan far fat fax fay fed fee few fib fig fin fir fit fix flu fly fob foe fog
for fox fry fun fur gab gag gal gap gas gay gel gem get gig gin gnu god goo
got gum gun gut guy gym had hag ham has hat hay hem hen her hew hex hey hid
him hip his hit hob hoe hog hop hot how hub hue hug hum hut ice icy ill imp
ink inn ion ire irk its ivy jab jam jar jaw jay jet jig job jog jot joy jug
jut keg ken key kid kin kit lab lad lag lap law lax lay lea led leg let lid
lie lip lit lob log lot low lug lye mad man map mar mat maw may men met mew
mid mix mob mod mom mop mow mud mug nab nag nap net new nib nil nip nit nod
nor not now nub nun nut oak oar oat odd ode off oft ohm oil old one opt orb
ore our out ova owe owl own pad pal pan pap par pat paw pay pea peg pen pep
per pet pew pie pig pin pit ply pod pop pot pry pub pug pun pup pus
put pyx rag ram ran rap raw ray red rib rid rig rim rip rob rod roe rot row
rub rue rug rum run rut rye sad sag sap sat saw sax say sea see sly
sob sod son sop sot sow soy spa spy sty sub sue sum sun sup tab tad tag tan
tar tax tea ten the thy tic tin tit toe tog ton too top tot tow toy try tub
tug tux two urn use van vat vet vex via vie vow wad wag war was wax way web
wed wee wet who why wig win wit woe wok won woo wow wry yak yam yap yaw yea
yen yes yet yew yip yon you zap zed zen zig zip zoo dying lying tying sky
skies flies fly cries cried happy happily merrily agreed agree feed bleed
exceed proceed succeed conferred preferring occurred controlled controlling
hopping hoping tanned fanned planned sizing seizing falling filling rolling
hissing fizzed buzzing gassed classes glasses caresses ponies ties cities
armies enemies abilities possibilities responsibilities conspicuous
conspicuously generalization generalizations internationalization
characteristically sympathetically uselessness carelessness thoughtfulness
meaningfulness electricity publicity simplicity authenticity multiplicity
triplicate duplicate communicate vindicate delicate intricate formative
informative cumulative speculative authoritative quantitative qualitative
rationalize nationalize industrialize materialize memorialize crystallize
gazelle quarrelle libelled modelled panelled cancelled travelled marvelled
bee tree free three knee agree decree degree employee referee guarantee
cease decease decrease increase release crease grease please tease appease
rate late gate mate fate hate date plate state create relate debate dictate
noise poise voice choice juice price slice twice advice device concede recede
are eve ice ore use ease blue true due sue cue hue value virtue tissue
argue vague league fatigue technique unique antique oblique physique
""".split()

CONSONANT_ONSETS = ["b", "bl", "br", "c", "ch", "cl", "cr", "d", "dr", "f",
                    "fl", "fr", "g", "gl", "gr", "h", "j", "k", "l", "m",
                    "n", "p", "pl", "pr", "qu", "r", "s", "sc", "sh", "sk",
                    "sl", "sm", "sn", "sp", "st", "str", "sw", "t", "th",
                    "tr", "tw", "v", "w", "wh", "y", "z"]
VOWEL_NUCLEI = ["a", "e", "i", "o", "u", "ai", "ea", "ee", "oa", "oo", "ou", "oy"]
CONSONANT_CODAS = ["b", "ck", "d", "ff", "g", "ll", "m", "mp", "n", "nd",
                   "ng", "nk", "p", "r", "rd", "rk", "rm", "rn", "rt", "s",
                   "sh", "sk", "ss", "st", "t", "tch", "th", "x", "zz"]


def synthetic_stems():
    for onset in CONSONANT_ONSETS:
        for nucleus in VOWEL_NUCLEI:
            for coda in CONSONANT_CODAS:
                yield onset + nucleus + coda


def build_vocabulary(target=23500):
    words = []
    seen = set()

    def add(word):
        if word and word not in seen:
            seen.add(word)
            words.append(word)

    for w in EDGE_WORDS:
        add(w)
    for base in BASES:
        add(base)
        for suffix in SUFFIXES:
            add(base + suffix)
            if len(words) >= target:
                return words
    # top up with synthetic single-syllable stems crossed with the
    # high-value suffixes until the target size is reached
    hot = ["s", "es", "ed", "ing", "ation", "izer", "ousness", "ement",
           "ion", "ive", "iti", "y", "alli", "ful", "e"]
    for stem in synthetic_stems():
        for suffix in ["", *hot]:
            add(stem + suffix)
            if len(words) >= target:
                return words
    return words


def main():
    data_dir = ROOT / "tests" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    words = build_vocabulary()
    stems = [reference_stem(w) for w in words]
    (data_dir / "porter_vocabulary.txt").write_text("\n".join(words) + "\n")
    (data_dir / "porter_expected.txt").write_text("\n".join(stems) + "\n")
    print(f"wrote {len(words)} words")


if __name__ == "__main__":
    main()
