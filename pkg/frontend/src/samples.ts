/** Bundled fixture pairs for quick exploration (no dataset content). */

export interface Sample {
  id: string;
  label: string;
  reference: string;
  hypothesis: string;
}

export const SAMPLES: Sample[] = [
  {
    id: "currency",
    label: "Currency and compounds",
    reference:
      "Mrs. Smith paid two thousand dollars for the ice cream, didn't she?",
    hypothesis: "mister smith paid $2000 for the icecream didn't she",
  },
  {
    id: "punctuation",
    label: "Shuffled punctuation",
    reference:
      "Good morning, everyone. Today we discuss results: revenue grew, costs fell!",
    hypothesis:
      "Good morning everyone? Today, we discuss results revenue grew: costs fell.",
  },
  {
    id: "fillers",
    label: "Fillers and annotations",
    reference: "Well, um, the colour was [unintelligible] quite nice.",
    hypothesis: "well the color was quite nice",
  },
];
