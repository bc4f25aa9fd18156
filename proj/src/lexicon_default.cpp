#include "cozo/tagger.hpp"

namespace cozo {

// Same bytes as data/lexicon.tsv; the raw literal opens with a newline that
// the returned view skips.
std::string_view builtin_lexicon_text() {
  static const char kText[] = R"LEXICON(
# Tagging lexicon: closed-class words plus common irregular and auxiliary
# forms. Format: surface<TAB>TAG. NOUN and ADJECTIVE entries are open-class
# anchors and are not treated as stopwords; everything else is.
# Lines after #SUFFIX are ordered suffix rules, first match wins.
i	PRONOUN
you	PRONOUN
he	PRONOUN
she	PRONOUN
it	PRONOUN
we	PRONOUN
they	PRONOUN
me	PRONOUN
him	PRONOUN
them	PRONOUN
us	PRONOUN
who	PRONOUN
whom	PRONOUN
himself	PRONOUN
herself	PRONOUN
itself	PRONOUN
themselves	PRONOUN
myself	PRONOUN
yourself	PRONOUN
ourselves	PRONOUN
someone	PRONOUN
anyone	PRONOUN
everyone	PRONOUN
my	POSSESSIVE_PRONOUN
your	POSSESSIVE_PRONOUN
his	POSSESSIVE_PRONOUN
her	POSSESSIVE_PRONOUN
its	POSSESSIVE_PRONOUN
our	POSSESSIVE_PRONOUN
their	POSSESSIVE_PRONOUN
mine	POSSESSIVE_PRONOUN
yours	POSSESSIVE_PRONOUN
hers	POSSESSIVE_PRONOUN
ours	POSSESSIVE_PRONOUN
theirs	POSSESSIVE_PRONOUN
a	DETERMINER
an	DETERMINER
the	DETERMINER
this	DETERMINER
that	DETERMINER
these	DETERMINER
those	DETERMINER
each	DETERMINER
every	DETERMINER
some	DETERMINER
any	DETERMINER
no	DETERMINER
another	DETERMINER
such	DETERMINER
both	DETERMINER
either	DETERMINER
neither	DETERMINER
all	DETERMINER
few	DETERMINER
many	DETERMINER
several	DETERMINER
much	DETERMINER
most	DETERMINER
which	DETERMINER
what	DETERMINER
of	PREPOSITION
in	PREPOSITION
to	PREPOSITION
for	PREPOSITION
with	PREPOSITION
on	PREPOSITION
at	PREPOSITION
by	PREPOSITION
from	PREPOSITION
up	PREPOSITION
about	PREPOSITION
into	PREPOSITION
over	PREPOSITION
after	PREPOSITION
under	PREPOSITION
above	PREPOSITION
across	PREPOSITION
off	PREPOSITION
out	PREPOSITION
down	PREPOSITION
near	PREPOSITION
through	PREPOSITION
during	PREPOSITION
before	PREPOSITION
between	PREPOSITION
around	PREPOSITION
against	PREPOSITION
among	PREPOSITION
without	PREPOSITION
within	PREPOSITION
along	PREPOSITION
behind	PREPOSITION
beyond	PREPOSITION
beneath	PREPOSITION
toward	PREPOSITION
towards	PREPOSITION
upon	PREPOSITION
onto	PREPOSITION
inside	PREPOSITION
outside	PREPOSITION
past	PREPOSITION
since	PREPOSITION
until	PREPOSITION
till	PREPOSITION
despite	PREPOSITION
via	PREPOSITION
per	PREPOSITION
like	PREPOSITION
and	CONJUNCTION
or	CONJUNCTION
but	CONJUNCTION
nor	CONJUNCTION
so	CONJUNCTION
yet	CONJUNCTION
because	CONJUNCTION
although	CONJUNCTION
though	CONJUNCTION
while	CONJUNCTION
if	CONJUNCTION
unless	CONJUNCTION
when	CONJUNCTION
where	CONJUNCTION
as	CONJUNCTION
whether	CONJUNCTION
is	VERB
are	VERB
was	VERB
were	VERB
be	VERB
been	VERB
being	VERB
am	VERB
has	VERB
have	VERB
had	VERB
do	VERB
does	VERB
did	VERB
done	VERB
can	VERB
could	VERB
will	VERB
would	VERB
shall	VERB
should	VERB
may	VERB
might	VERB
must	VERB
go	VERB
goes	VERB
went	VERB
gone	VERB
come	VERB
came	VERB
get	VERB
got	VERB
gotten	VERB
make	VERB
made	VERB
take	VERB
took	VERB
taken	VERB
see	VERB
saw	VERB
seen	VERB
say	VERB
said	VERB
says	VERB
know	VERB
knew	VERB
known	VERB
think	VERB
thought	VERB
give	VERB
gave	VERB
given	VERB
find	VERB
found	VERB
tell	VERB
told	VERB
become	VERB
became	VERB
begin	VERB
began	VERB
begun	VERB
show	VERB
showed	VERB
shown	VERB
hear	VERB
heard	VERB
let	VERB
put	VERB
set	VERB
run	VERB
ran	VERB
read	VERB
write	VERB
wrote	VERB
written	VERB
sit	VERB
sat	VERB
stand	VERB
stood	VERB
lose	VERB
lost	VERB
pay	VERB
paid	VERB
meet	VERB
met	VERB
send	VERB
sent	VERB
build	VERB
built	VERB
fall	VERB
fell	VERB
fallen	VERB
cut	VERB
drive	VERB
drove	VERB
driven	VERB
buy	VERB
bought	VERB
speak	VERB
spoke	VERB
spoken	VERB
spend	VERB
spent	VERB
grow	VERB
grew	VERB
grown	VERB
win	VERB
won	VERB
keep	VERB
kept	VERB
hold	VERB
held	VERB
bring	VERB
brought	VERB
leave	VERB
left	VERB
feel	VERB
felt	VERB
mean	VERB
meant	VERB
eat	VERB
ate	VERB
eaten	VERB
drink	VERB
drank	VERB
drunk	VERB
fly	VERB
flew	VERB
flown	VERB
wear	VERB
wore	VERB
worn	VERB
rise	VERB
rose	VERB
risen	VERB
break	VERB
broke	VERB
broken	VERB
catch	VERB
caught	VERB
teach	VERB
taught	VERB
choose	VERB
chose	VERB
chosen	VERB
sleep	VERB
slept	VERB
swim	VERB
swam	VERB
swum	VERB
throw	VERB
threw	VERB
thrown	VERB
understand	VERB
understood	VERB
draw	VERB
drew	VERB
drawn	VERB
forget	VERB
forgot	VERB
forgotten	VERB
sell	VERB
sold	VERB
shut	VERB
deal	VERB
dealt	VERB
bend	VERB
bent	VERB
bite	VERB
bit	VERB
bitten	VERB
blow	VERB
blew	VERB
blown	VERB
burst	VERB
cost	VERB
dig	VERB
dug	VERB
feed	VERB
fed	VERB
fight	VERB
fought	VERB
freeze	VERB
froze	VERB
frozen	VERB
hang	VERB
hung	VERB
hide	VERB
hid	VERB
hidden	VERB
hit	VERB
hurt	VERB
lay	VERB
laid	VERB
lead	VERB
led	VERB
lend	VERB
lent	VERB
lit	VERB
quit	VERB
ride	VERB
rode	VERB
ridden	VERB
rang	VERB
seek	VERB
sought	VERB
shake	VERB
shook	VERB
shaken	VERB
shine	VERB
shone	VERB
shoot	VERB
shot	VERB
sing	VERB
sang	VERB
sung	VERB
sink	VERB
sank	VERB
sunk	VERB
slide	VERB
slid	VERB
steal	VERB
stole	VERB
stolen	VERB
stick	VERB
stuck	VERB
sting	VERB
stung	VERB
strike	VERB
struck	VERB
swear	VERB
swore	VERB
sworn	VERB
sweep	VERB
swept	VERB
tear	VERB
tore	VERB
torn	VERB
wake	VERB
woke	VERB
woken	VERB
weep	VERB
wept	VERB
want	VERB
wants	VERB
need	VERB
needs	VERB
seem	VERB
seems	VERB
believe	VERB
believes	VERB
happen	VERB
happens	VERB
remember	VERB
remembers	VERB
consider	VERB
considers	VERB
appear	VERB
appears	VERB
expect	VERB
expects	VERB
remain	VERB
remains	VERB
suggest	VERB
suggests	VERB
require	VERB
requires	VERB
decide	VERB
decides	VERB
try	VERB
tries	VERB
ask	VERB
asks	VERB
use	VERB
uses	VERB
don't	VERB
didn't	VERB
doesn't	VERB
isn't	VERB
wasn't	VERB
weren't	VERB
can't	VERB
couldn't	VERB
won't	VERB
wouldn't	VERB
shouldn't	VERB
hasn't	VERB
haven't	VERB
hadn't	VERB
not	ADVERB
also	ADVERB
very	ADVERB
too	ADVERB
then	ADVERB
now	ADVERB
here	ADVERB
there	ADVERB
again	ADVERB
always	ADVERB
never	ADVERB
often	ADVERB
soon	ADVERB
still	ADVERB
just	ADVERB
even	ADVERB
well	ADVERB
almost	ADVERB
already	ADVERB
perhaps	ADVERB
maybe	ADVERB
quite	ADVERB
rather	ADVERB
however	ADVERB
instead	ADVERB
later	ADVERB
once	ADVERB
twice	ADVERB
away	ADVERB
back	ADVERB
else	ADVERB
ever	ADVERB
far	ADVERB
together	ADVERB
sometimes	ADVERB
somewhere	ADVERB
anywhere	ADVERB
everywhere	ADVERB
nowhere	ADVERB
indeed	ADVERB
meanwhile	ADVERB
moreover	ADVERB
nevertheless	ADVERB
therefore	ADVERB
thus	ADVERB
only	ADVERB
really	ADVERB
ago	ADVERB
good	ADJECTIVE
new	ADJECTIVE
first	ADJECTIVE
last	ADJECTIVE
long	ADJECTIVE
great	ADJECTIVE
little	ADJECTIVE
own	ADJECTIVE
other	ADJECTIVE
old	ADJECTIVE
right	ADJECTIVE
big	ADJECTIVE
high	ADJECTIVE
small	ADJECTIVE
large	ADJECTIVE
next	ADJECTIVE
early	ADJECTIVE
young	ADJECTIVE
important	ADJECTIVE
bad	ADJECTIVE
same	ADJECTIVE
able	ADJECTIVE
asleep	ADJECTIVE
angry	ADJECTIVE
happy	ADJECTIVE
sad	ADJECTIVE
free	ADJECTIVE
full	ADJECTIVE
hot	ADJECTIVE
cold	ADJECTIVE
warm	ADJECTIVE
dark	ADJECTIVE
light	ADJECTIVE
faint	ADJECTIVE
real	ADJECTIVE
sure	ADJECTIVE
whole	ADJECTIVE
main	ADJECTIVE
certain	ADJECTIVE
strong	ADJECTIVE
true	ADJECTIVE
white	ADJECTIVE
black	ADJECTIVE
red	ADJECTIVE
blue	ADJECTIVE
green	ADJECTIVE
poor	ADJECTIVE
rich	ADJECTIVE
safe	ADJECTIVE
wrong	ADJECTIVE
easy	ADJECTIVE
late	ADJECTIVE
deep	ADJECTIVE
wide	ADJECTIVE
narrow	ADJECTIVE
thick	ADJECTIVE
thin	ADJECTIVE
quiet	ADJECTIVE
loud	ADJECTIVE
clean	ADJECTIVE
empty	ADJECTIVE
heavy	ADJECTIVE
quick	ADJECTIVE
slow	ADJECTIVE
soft	ADJECTIVE
tall	ADJECTIVE
short	ADJECTIVE
tired	ADJECTIVE
busy	ADJECTIVE
ready	ADJECTIVE
fine	ADJECTIVE
nice	ADJECTIVE
wild	ADJECTIVE
calm	ADJECTIVE
zero	NUMBER
one	NUMBER
two	NUMBER
three	NUMBER
four	NUMBER
five	NUMBER
six	NUMBER
seven	NUMBER
eight	NUMBER
nine	NUMBER
ten	NUMBER
eleven	NUMBER
twelve	NUMBER
twenty	NUMBER
thirty	NUMBER
forty	NUMBER
fifty	NUMBER
sixty	NUMBER
seventy	NUMBER
eighty	NUMBER
ninety	NUMBER
hundred	NUMBER
thousand	NUMBER
million	NUMBER
oh	OTHER
ah	OTHER
hey	OTHER
yes	OTHER
hello	OTHER
hi	OTHER
wow	OTHER
hmm	OTHER
please	OTHER
thing	NOUN
things	NOUN
nothing	NOUN
something	NOUN
anything	NOUN
everything	NOUN
morning	NOUN
evening	NOUN
building	NOUN
king	NOUN
bed	NOUN
day	NOUN
night	NOUN
time	NOUN
year	NOUN
man	NOUN
woman	NOUN
men	NOUN
women	NOUN
people	NOUN
child	NOUN
children	NOUN
way	NOUN
word	NOUN
words	NOUN
name	NOUN
home	NOUN
house	NOUN
door	NOUN
window	NOUN
floor	NOUN
desk	NOUN
room	NOUN
letter	NOUN
water	NOUN
#SUFFIX
-ly	ADVERB
-ing	VERB
-ed	VERB
-tion	NOUN
-ness	NOUN
-ment	NOUN
-ous	ADJECTIVE
-ful	ADJECTIVE
-ive	ADJECTIVE
)LEXICON";
  return std::string_view(kText).substr(1);
}

}  // namespace cozo
