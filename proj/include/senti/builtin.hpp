#pragma once

#include <string_view>

#include "senti/classify.hpp"
#include "senti/spelling.hpp"

namespace senti::builtin {

// Compact reference lexicons baked into the library so every mode of
// operation works out of the box. File-based lexicons with the same format
// can replace any slot through the classifier config.

inline constexpr std::string_view kEnStrength = R"(# general-purpose strength lexicon (en)
# term<TAB>value[<TAB>flag]
happy	3
unhappy	-3
sad	-2
glad	2
good	2
bad	-2
great	4
terrible	-4
love	3
hate	-4
excellent	5
awful	-4
nice	2
horrible	-4
amazing	4
wonderful	4
poor	-2
annoying	-2
problem	-2
problems	-2
thanks	2
useless	-3
useful	2
wrong	-2
perfect	4
worst	-5
best	4
very	1	booster
really	1	booster
extremely	1	booster
not	1	negator
never	1	negator
no	1	negator
don't	1	negator
doesn't	1	negator
can't	1	negator
won't	1	negator
isn't	1	negator
)";

inline constexpr std::string_view kEnStrengthSe = R"(# software-engineering flavored strength lexicon (en)
happy	2
unhappy	-2
works	2
working	2
broken	-3
breaks	-3
crash	-4
crashes	-4
bug	-2
bugs	-2
buggy	-3
fix	2
fixed	2
fails	-3
fail	-3
failed	-3
failing	-3
pass	2
passes	2
passed	2
clean	2
elegant	3
mess	-2
messy	-2
hack	-1
deprecated	-2
awesome	4
ugly	-2
fast	2
slow	-2
stable	2
unstable	-3
regression	-3
refactor	1
legacy	-1
very	1	booster
really	1	booster
not	1	negator
never	1	negator
no	1	negator
don't	1	negator
doesn't	1	negator
can't	1	negator
won't	1	negator
isn't	1	negator
)";

inline constexpr std::string_view kEnValence = R"(# valence lexicon (en), values in [-1,1]
happy	0.8
unhappy	-0.6
sad	-0.5
glad	0.5
good	0.5
bad	-0.5
great	0.8
terrible	-0.8
love	0.7
hate	-0.7
excellent	0.9
awful	-0.8
nice	0.6
horrible	-0.8
amazing	0.8
wonderful	0.8
poor	-0.4
annoying	-0.5
problem	-0.3
problems	-0.3
thanks	0.4
useless	-0.6
useful	0.5
wrong	-0.4
perfect	0.9
worst	-0.9
best	0.8
works	0.4
working	0.4
broken	-0.6
crash	-0.7
bug	-0.4
bugs	-0.4
fix	0.3
fixed	0.4
fails	-0.6
fail	-0.6
failed	-0.6
pass	0.3
passed	0.4
clean	0.4
slow	-0.4
fast	0.4
fine	0.3
very	1.25	booster
really	1.2	booster
extremely	1.4	booster
not	1	negator
never	1	negator
no	1	negator
don't	1	negator
doesn't	1	negator
can't	1	negator
won't	1	negator
isn't	1	negator
)";

inline constexpr std::string_view kDeStrength = R"(# general-purpose strength lexicon (de)
glücklich	3
unglücklich	-3
gut	2
schlecht	-2
großartig	4
schrecklich	-4
liebe	3
hasse	-4
super	3
toll	3
furchtbar	-4
schlimm	-3
problem	-2
probleme	-2
danke	2
fehler	-2
falsch	-2
perfekt	4
traurig	-2
froh	2
ärgerlich	-2
nervig	-2
sehr	1	booster
wirklich	1	booster
extrem	1	booster
nicht	1	negator
kein	1	negator
keine	1	negator
nie	1	negator
niemals	1	negator
)";

inline constexpr std::string_view kDeStrengthSe = R"(# software-engineering flavored strength lexicon (de)
glücklich	2
unglücklich	-2
funktioniert	2
kaputt	-3
absturz	-4
abgestürzt	-4
fehler	-2
bug	-2
elegant	3
sauber	2
chaos	-3
langsam	-2
schnell	2
stabil	2
instabil	-3
veraltet	-1
behoben	2
gescheitert	-3
bestanden	2
sehr	1	booster
wirklich	1	booster
nicht	1	negator
kein	1	negator
keine	1	negator
nie	1	negator
)";

inline constexpr std::string_view kDeValence = R"(# valence lexicon (de), values in [-1,1]
glücklich	0.8
unglücklich	-0.6
gut	0.5
schlecht	-0.5
großartig	0.8
schrecklich	-0.8
liebe	0.7
hasse	-0.7
super	0.7
toll	0.7
furchtbar	-0.8
schlimm	-0.6
problem	-0.3
probleme	-0.3
danke	0.4
fehler	-0.4
falsch	-0.4
perfekt	0.9
traurig	-0.5
froh	0.5
funktioniert	0.4
kaputt	-0.6
absturz	-0.7
langsam	-0.4
schnell	0.4
sehr	1.25	booster
wirklich	1.2	booster
extrem	1.4	booster
nicht	1	negator
kein	1	negator
keine	1	negator
nie	1	negator
niemals	1	negator
)";

// word<TAB>frequency[<TAB>noun]
inline constexpr std::string_view kEnDictionary = R"(# spelling dictionary (en)
the	900
a	850
i	800
of	780
and	760
to	740
in	720
is	700
it	680
not	650
on	640
for	620
very	600
this	580
that	560
we	540
you	520
happy	500
are	480
with	470
was	460
as	450
be	440
at	430
have	420
by	410
good	400
from	390
am	380
or	370
do	360
an	350
can	340
my	330
but	310
bad	300
will	290
so	240
no	235
if	230
me	225
he	215
she	214
they	213
there	212
here	211
what	209
when	208
how	207
who	206
code	260
great	250
build	220
team	200
test	190
project	180
fix	170
all	165
error	160
works	160
meeting	150
bug	140
server	130
unhappy	120
review	110
release	100
statement	90
broken	80
deploy	70
neutral	60
should	55
merge	50
branch	45
commit	40
)";

inline constexpr std::string_view kDeDictionary = R"(# spelling dictionary (de)
der	900
die	890
und	880
das	870
ein	860
eine	850
ich	800
es	790
zu	780
den	770
mit	760
auf	750
für	740
ist	700
im	690
dem	680
sich	670
nicht	600
auch	590
als	580
an	570
aus	560
wir	550
bei	540
nach	530
wie	520
aber	510
sehr	500
noch	490
nur	480
oder	470
wenn	460
dann	450
man	440
um	430
vor	420
bin	400
gut	400
war	390
so	380
er	370
sie	360
du	350
glücklich	300
sind	280
haben	260
schlecht	250
team	200	noun
projekt	180	noun
arbeit	160	noun
woche	150	noun
fehler	140	noun
problem	130	noun
haus	120	noun
code	115	noun
unglücklich	100
besprechung	90	noun
idee	85	noun
termin	80	noun
server	75	noun
test	70	noun
gerne	65
heute	60
morgen	55
)";

inline Lexicon lexicon(std::string_view text, LexiconKind kind, const std::string& name) {
    return Lexicon::parse(text, kind, name);
}

inline Dictionary default_dictionary(Language language) {
    return language == Language::en ? Dictionary::parse(kEnDictionary, "builtin:en_dictionary")
                                    : Dictionary::parse(kDeDictionary, "builtin:de_dictionary");
}

// The shipped quartet: two strength scorers (general + software-engineering
// lexicon), the rule-based valence scorer and the plain pattern averager.
// The pattern slot doubles as the default real-time classifier.
inline ClassifierConfig default_config(Language language) {
    ClassifierConfig config;
    config.language = language;
    config.realtime_slot = 3;
    config.valence_epsilon = kDefaultValenceEpsilon;
    if (language == Language::en) {
        config.slots = {
            ClassifierSlot{SlotKind::strength, "strength",
                           lexicon(kEnStrength, LexiconKind::strength, "builtin:en_strength"), ""},
            ClassifierSlot{SlotKind::strength, "strength-se",
                           lexicon(kEnStrengthSe, LexiconKind::strength, "builtin:en_strength_se"),
                           ""},
            ClassifierSlot{SlotKind::valence, "valence",
                           lexicon(kEnValence, LexiconKind::valence, "builtin:en_valence"), ""},
            ClassifierSlot{SlotKind::pattern, "pattern",
                           lexicon(kEnValence, LexiconKind::valence, "builtin:en_valence"), ""},
        };
    } else {
        config.slots = {
            ClassifierSlot{SlotKind::strength, "strength",
                           lexicon(kDeStrength, LexiconKind::strength, "builtin:de_strength"), ""},
            ClassifierSlot{SlotKind::strength, "strength-se",
                           lexicon(kDeStrengthSe, LexiconKind::strength, "builtin:de_strength_se"),
                           ""},
            ClassifierSlot{SlotKind::valence, "valence",
                           lexicon(kDeValence, LexiconKind::valence, "builtin:de_valence"), ""},
            ClassifierSlot{SlotKind::pattern, "pattern",
                           lexicon(kDeValence, LexiconKind::valence, "builtin:de_valence"), ""},
        };
    }
    return config;
}

}  // namespace senti::builtin
