#!/usr/bin/env python3
"""Write data/lexicon.tsv, the default part-of-speech lexicon for `ablate`.

Context-free: each token has exactly one tag. Direction and spatial words
("left", "right", "straight", "up") are tagged other even though they can act
as adjectives, so the noun/adjective ablations keep route structure intact.
"""

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

NOUNS = """
room rooms bedroom bathroom kitchen hallway hall corridor living dining office
study library lounge foyer entryway entrance exit doorway door doors window
windows stairs staircase stairway step steps landing floor floors level ceiling
wall walls corner end side middle center front back top bottom area space
closet wardrobe pantry laundry garage basement attic balcony porch patio deck
yard garden pool spa gym theater theatre bar lobby reception desk counter
table tables chair chairs couch sofa sofas armchair bench stool stools ottoman
bed beds nightstand dresser cabinet cabinets shelf shelves bookshelf bookcase
drawer drawers chest mirror mirrors painting paintings picture pictures photo
frame poster lamp lamps light lights chandelier fan fireplace mantle mantel
television tv screen monitor computer piano guitar speaker clock vase plant
plants flower flowers tree pot rug carpet mat curtain curtains blinds towel
towels sink sinks toilet bathtub tub shower faucet refrigerator fridge oven
stove microwave dishwasher washer dryer machine island statue sculpture bust
pillar column columns arch archway railing rail banister hallways rooms
fountain trash can bin basket box boxes bag crib cushion pillow pillows
blanket radiator heater vent printer copier locker mailbox globe aquarium
bicycle easel stand rack umbrella coat hat shoe shoes suitcase hamper trunk
pedestal projector treadmill bathtub counters cupboard cupboards sideboard
buffet console desk desks rail gate fence path walkway passage opening gap
sign signs clock clocks vanity tile tiles wood glass marble stone brick
kitchenette den nook alcove niche partition divider bookshelves ledge sill
cabinetry countertop countertops barstool barstools recliner loveseat futon
headboard footboard bunk cot hammock swing slide toy toys game games
puzzle board whiteboard chalkboard map maps flag flags banner clock tower
stairwell elevator escalator ramp lift threshold hinge handle knob switch
outlet plug cord cable wire pipe drain shelfs tablecloth runner placemat
dish dishes plate plates bowl bowls cup cups glass glasses bottle bottles
jar jars kettle toaster blender mixer pan pans skillet sponge soap
shampoo toothbrush razor comb brush hairdryer scale laundry detergent
iron ironing hanger hangers clothes shirt pants jacket dress boots sneakers
sandals socks scarf gloves belt tie wallet purse backpack briefcase laptop
tablet phone camera keyboard mouse desk chair piano bench organ drum drums
violin cello harp trumpet saxophone flute microphone amplifier record
records vinyl cd cds dvd dvds book books magazine magazines newspaper
calendar candle candles candlestick sconce lantern torch spotlight bulb
shade lampshade tapestry quilt duvet comforter sheet sheets mattress
dresser armoire hutch credenza cart trolley tray stand umbrella doormat
staircases doorways windows hallway entryways corridors bedrooms bathrooms
kitchens offices studies closets balconies patios decks porches gardens
yards pools lobbies lounges foyers landings railings banisters pillars
arches fireplaces mantles couches benches ottomans nightstands dressers
sculptures statues busts vases plants rugs carpets mats towels sinks
toilets tubs showers ovens stoves fridges microwaves islands refrigerators
paintings frames posters lamps fans televisions tvs screens monitors
computers pianos guitars speakers beds cabinets drawers mirrors pictures
photos tables chairs sofas armchairs stools shelves bookshelves bookcases
wardrobes cupboards counters desks consoles gates fences paths walkways
passages openings signs tiles partitions dividers ledges sills recliners
cushions pillows blankets radiators heaters printers lockers globes
aquariums bicycles easels racks hampers trunks pedestals projectors
treadmills baskets bins boxes bags cribs toys
person people man woman child dog cat house home apartment building
outside inside exterior interior view hallway edge entry wing section
half row line set pair group couple rest way direction turn turns
coffee wine trash potted grandfather candle towel washing umbrella coat
dining pool side candlestick bookend doorframe windowsill baseboard molding
skylight beam rafter chimney hearth grate poker log logs firewood woodstove
sauna jacuzzi hottub steam sink vanity cabinetry mudroom foyer vestibule
atrium courtyard terrace veranda gazebo pergola shed barn workshop studio
gallery museum chapel church ballroom conservatory greenhouse sunroom
playroom nursery classroom cafeteria restaurant kitchenette bathhouse
billiard billiards ping pong foosball dartboard jukebox arcade bowling
piano harpsichord bookcase bookshelf encyclopedia armchair rocker rocking
chaise sectional daybed bunkbed bassinet highchair playpen stroller
walker wheelchair cane crutch ladder stepladder toolbox tool tools hammer
drill saw wrench screwdriver workbench bench vise clamp shovel rake hoe
hose sprinkler mower lawnmower wheelbarrow planter pots soil seed seeds
fern cactus palm bamboo orchid rose roses tulip tulips daisy lily ivy moss
bush bushes hedge shrub shrubs grass lawn pond stream bridge rock rocks
boulder pebble sand dirt mud puddle snow ice water fire smoke steam air
sky sun moon star stars cloud clouds rain wind storm window pane shutter
shutters awning canopy tent umbrella parasol cushion throw afghan doily
coaster napkin fork knife spoon ladle spatula whisk tongs grater peeler
colander strainer cutting tray platter pitcher jug mug teapot thermos
cooler freezer icebox range hood cooktop griddle grill barbecue smoker
fryer crockpot rice cooker waffle juicer grinder scale timer thermometer
calculator stapler tape scissors ruler pen pencil marker crayon paper
notebook folder binder envelope stamp letter package parcel crate
barrel bucket pail tub vat tank cylinder canister drum container
wardrobe dresser chifforobe coatrack hatstand valet mannequin dummy doll
dollhouse teddy bear robot train car truck plane boat ship kite ball
balls bat racket club stick puck net hoop goal target dartboard trophy
trophies medal ribbon certificate diploma portrait landscape mural fresco
mosaic stained relief carving figurine ornament ornaments decoration
decorations garland wreath tinsel lights menorah candelabra urn jar
""".split()

ADJECTIVES = """
red orange yellow green blue purple pink brown black white gray grey silver
gold golden beige tan cream ivory maroon navy teal turquoise dark light pale
bright dim colorful wooden wood metal metallic glass marble stone brick
leather fabric plush velvet wicker rattan plastic ceramic tiled carpeted
painted striped patterned checkered floral plain large small big little huge
tiny tall short long wide narrow thin thick high low round square circular
rectangular oval curved flat open closed double single main large modern old
new antique vintage rustic fancy elegant simple ornate decorative formal
casual cozy spacious empty full clean dirty messy neat tidy bare furnished
unfurnished carpeted hardwood glossy shiny matte soft hard heavy light
upper lower outer inner exterior interior master guest spare small half
wet dry warm cold hot cool quiet loud sunny shady open glassed framed
spiral steep shallow gentle grand huge massive miniature petite giant
enormous compact cluttered crowded sparse roomy airy stuffy dusty bright
colourful gray-blue stainless wrought iron brass bronze copper chrome
porcelain granite concrete wooden-floored lit unlit darker lighter bigger
smaller larger taller shorter longer wider narrower higher lower biggest
smallest largest tallest shortest longest widest narrowest highest lowest
nearest closest farthest furthest final entire whole adjacent nearby
similar different identical matching same other another several few
many numerous various
""".split()

OTHER = """
left right straight forward forwards backward backwards ahead behind up down
upstairs downstairs upward downward around across along through past beyond
toward towards into onto out off over under underneath beneath above below
between beside besides next near by to at in on of from with without within
against inside outside north south east west clockwise counterclockwise
the a an this that these those it its there here then and or but so
walk walking walks go going goes turn turning turned take taking head heading
enter entering exit exiting leave leaving stop stopping wait waiting stand
standing continue continuing proceed proceeding move moving pass passing
climb climbing descend descending follow following keep keeping make making
face facing reach reaching get getting come coming cross crossing veer
veering step stepping bear bearing approach approaching find finding look
looking see seeing is are be being was were will should until once when after
before while as just slightly immediately again first second third last
once twice halfway all way towards you your yourself
""".split()


def plural(w):
    if w.endswith(("s", "x", "z", "ch", "sh")):
        return w + "es"
    if w.endswith("y") and w[-2:-1] not in "aeiou":
        return w[:-1] + "ies"
    return w + "s"


def main():
    nouns = list(NOUNS)
    nouns += [plural(w) for w in NOUNS if not w.endswith("s")]
    tags = {}
    # earlier groups win: direction words stay "other" even when listed again
    for tag, words in (("other", OTHER), ("noun", nouns), ("adjective", ADJECTIVES)):
        for w in words:
            w = w.lower()
            if w not in tags:
                tags[w] = tag
    out = ROOT / "data" / "lexicon.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("".join(f"{w}\t{tags[w]}\n" for w in sorted(tags)))
    print(f"{len(tags)} tokens -> {out}")


if __name__ == "__main__":
    main()
