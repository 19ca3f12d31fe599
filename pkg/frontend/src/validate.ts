import type { LabelDraft } from "./types.js";

export const ORIGIN_VERDICTS = [
  "internal_original",
  "external_copy",
  "undecided",
] as const;

// suggestions only; the category vocabulary stays free-form
export const CATEGORY_SUGGESTIONS = [
  "source_code",
  "configuration_file",
  "gui_definition",
  "data_example",
  "html",
  "non_code",
] as const;

export function validateDraft(draft: LabelDraft): string[] {
  const errors: string[] = [];
  if (!draft.category || !draft.category.trim()) {
    errors.push("category must not be empty");
  }
  if (!(ORIGIN_VERDICTS as readonly string[]).includes(draft.origin_verdict)) {
    errors.push(
      `origin_verdict must be one of ${ORIGIN_VERDICTS.join(", ")}`,
    );
  }
  if (typeof draft.license_conflict !== "boolean") {
    errors.push("license_conflict must be a boolean");
  }
  return errors;
}
